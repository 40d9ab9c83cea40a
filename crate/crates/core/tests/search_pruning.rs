use sectorpack::search::{search_quadratics, search_unpruned};
use sectorpack::{IVQuadratic, Sector};

fn in_box(p: &IVQuadratic, bound: i64) -> bool {
    p.to_i64s().is_some_and(|c| c.iter().all(|v| v.abs() <= bound))
}

#[test]
fn pruning_loses_nothing() {
    for alpha in ["inf", "1", "2"] {
        let sector = Sector::new(alpha.parse().unwrap());
        let brute: Vec<IVQuadratic> = search_unpruned(&sector, 2, 100)
            .unwrap()
            .into_iter()
            .map(|s| s.poly)
            .collect();
        let pruned: Vec<IVQuadratic> = search_quadratics(&sector, 2, 100)
            .unwrap()
            .survivors
            .into_iter()
            .map(|s| s.poly)
            .filter(|p| in_box(p, 2))
            .collect();
        assert_eq!(pruned, brute, "sector {alpha}");
    }
}
