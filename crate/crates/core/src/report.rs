//! JSON wire types and the versioned report envelope.

use serde::{Deserialize, Serialize};

use crate::collision::CollisionWitness;
use crate::density::DensityReport;
use crate::numeric::{BigInt, LatticePoint};
use crate::poly::IVQuadratic;
use crate::search::Survivor;
use crate::sector::{AffineCone, Sector};
use crate::verifier::{ConditionChecklist, VerificationReport};

pub const SCHEMA_VERSION: u32 = 1;

/// A report body under a top-level `"schema"` version field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report<T> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Report<T> {
    pub fn new(body: T) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            body,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyBody {
    pub poly: IVQuadratic,
    pub sector: Sector,
    pub n: u64,
    pub conditions: ConditionChecklist,
    pub result: VerificationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollideBody {
    pub poly: IVQuadratic,
    pub cone: AffineCone,
    pub witness: CollisionWitness,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityBody {
    pub poly: IVQuadratic,
    pub sector: Sector,
    #[serde(flatten)]
    pub report: DensityReport,
}

/// One line of search output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivorBody {
    pub sector: Sector,
    #[serde(flatten)]
    pub survivor: Survivor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateBody {
    pub sector: Sector,
    pub xmax: i64,
    pub points: Vec<LatticePoint>,
}

/// An arbitrary-precision integer on the wire: a JSON number when it fits in
/// 64 bits, a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            I(i64),
            U(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::I(v) => Ok(JsonInt(v.into())),
            Raw::U(v) => Ok(JsonInt(v.into())),
            Raw::S(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

/// `#[serde(with = "crate::report::big")]` for `BigInt` fields.
pub mod big {
    use super::JsonInt;
    use crate::collision::CollisionWitness;
use crate::density::DensityReport;
use crate::numeric::{BigInt, LatticePoint};
use crate::poly::IVQuadratic;
use crate::search::Survivor;
use crate::sector::{AffineCone, Sector};
use crate::verifier::{ConditionChecklist, VerificationReport};

pub const SCHEMA_VERSION: u32 = 1;

/// A report body under a top-level `"schema"` version field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report<T> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Report<T> {
    pub fn new(body: T) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            body,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyBody {
    pub poly: IVQuadratic,
    pub sector: Sector,
    pub n: u64,
    pub conditions: ConditionChecklist,
    pub result: VerificationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollideBody {
    pub poly: IVQuadratic,
    pub cone: AffineCone,
    pub witness: CollisionWitness,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityBody {
    pub poly: IVQuadratic,
    pub sector: Sector,
    #[serde(flatten)]
    pub report: DensityReport,
}

/// One line of search output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivorBody {
    pub sector: Sector,
    #[serde(flatten)]
    pub survivor: Survivor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateBody {
    pub sector: Sector,
    pub xmax: i64,
    pub points: Vec<LatticePoint>,
}
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        JsonInt(v.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        JsonInt::deserialize(d).map(|j| j.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collision::{find_collision, DEFAULT_BUDGET};
    use crate::verifier::{necessary_conditions, verify_prefix};

    fn round_trip<T>(r: &Report<T>)
    where
        T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug,
    {
        let j = serde_json::to_string(r).unwrap();
        assert!(j.starts_with(r#"{"schema":1,"#), "{j}");
        assert_eq!(&serde_json::from_str::<Report<T>>(&j).unwrap(), r);
    }

    #[test]
    fn big_integers_switch_to_strings() {
        let big = JsonInt(BigInt::from(i64::MAX) * 4);
        let j = serde_json::to_string(&big).unwrap();
        assert_eq!(j, format!("\"{}\"", big.0));
        assert_eq!(serde_json::from_str::<JsonInt>(&j).unwrap(), big);
        assert_eq!(serde_json::to_string(&JsonInt((-5).into())).unwrap(), "-5");
    }

    #[test]
    fn reports_round_trip() {
        let f = IVQuadratic::cantor_f();
        let sector = Sector::first_quadrant();
        round_trip(&Report::new(VerifyBody {
            conditions: necessary_conditions(&f, &sector),
            result: verify_prefix(&f, &sector, 20).unwrap(),
            poly: f.clone(),
            sector: sector.clone(),
            n: 20,
        }));
        let disk = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]);
        let cone = AffineCone::from_ints((10, 10), (1, 0), (0, 1)).unwrap();
        round_trip(&Report::new(CollideBody {
            witness: find_collision(&disk, &cone, DEFAULT_BUDGET).unwrap(),
            poly: disk,
            cone,
        }));
        round_trip(&Report::new(DensityBody {
            report: crate::density::empirical_density(&f, &sector, &[10, 20]).unwrap(),
            poly: f.clone(),
            sector: sector.clone(),
        }));
        round_trip(&Report::new(EnumerateBody {
            points: sector.enumerate_truncated(2),
            sector,
            xmax: 2,
        }));
    }

    #[test]
    fn witness_field_names() {
        let disk = IVQuadratic::from_sextuple([2, 0, 2, 1, 1, 0]);
        let w = find_collision(&disk, &AffineCone::first_quadrant(), DEFAULT_BUDGET).unwrap();
        let v: serde_json::Value = serde_json::to_value(&w).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["anchor", "i", "p", "q", "r", "s", "value"]);
    }
}
