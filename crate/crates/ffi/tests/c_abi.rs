use std::ffi::CString;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use sectorpack_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 256];
    let n = unsafe { sp_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let bytes: Vec<u8> = buf.iter().take(n.min(255)).map(|&c| c as u8).collect();
    String::from_utf8(bytes).unwrap()
}

struct Handles {
    poly: *mut SpPoly,
    sector: *mut SpSector,
}

impl Handles {
    fn new(poly: &str, sector: &str) -> Self {
        let mut h = Handles {
            poly: ptr::null_mut(),
            sector: ptr::null_mut(),
        };
        unsafe {
            assert_eq!(sp_poly_parse(cstr(poly).as_ptr(), &mut h.poly), SpStatus::Ok);
            assert_eq!(sp_sector_parse(cstr(sector).as_ptr(), &mut h.sector), SpStatus::Ok);
        }
        h
    }
}

impl Drop for Handles {
    fn drop(&mut self) {
        unsafe {
            sp_poly_free(self.poly);
            sp_sector_free(self.sector);
        }
    }
}

#[test]
fn cantor_verifies_through_the_abi() {
    let h = Handles::new("1 1 1 2 1 0", "inf");
    let mut r = SpVerifyResult::default();
    assert_eq!(unsafe { sp_verify_prefix(h.poly, h.sector, 2000, &mut r) }, SpStatus::Ok);
    assert_eq!(r.kind, SpVerifyKind::Verified as i32);
    assert_eq!(r.verified_up_to, 2000);
}

#[test]
fn gap_and_collision_results() {
    let h = Handles::new("1 1 1 2 1 0", "1/1");
    let mut r = SpVerifyResult::default();
    assert_eq!(unsafe { sp_verify_prefix(h.poly, h.sector, 10, &mut r) }, SpStatus::Ok);
    assert_eq!((r.kind, r.value), (SpVerifyKind::Gap as i32, 1));

    let h = Handles::new("x^2+y^2", "inf");
    assert_eq!(unsafe { sp_verify_prefix(h.poly, h.sector, 10, &mut r) }, SpStatus::Ok);
    assert_eq!(r.kind, SpVerifyKind::Collision as i32);
    assert_eq!((r.px, r.py, r.qx, r.qy, r.value), (0, 1, 1, 0, 1));
}

#[test]
fn collision_witness_is_genuine() {
    let h = Handles::new("x^2 - 3*x*y + y^2 + 2*x", "inf");
    let mut cone = ptr::null_mut();
    let mut w = SpCollision::default();
    unsafe {
        assert_eq!(
            sp_cone_parse(cstr("3,-2").as_ptr(), cstr("1,0").as_ptr(), cstr("1,2").as_ptr(), &mut cone),
            SpStatus::Ok
        );
        assert_eq!(sp_find_collision(h.poly, cone, 0, &mut w), SpStatus::Ok);
        let (mut vp, mut vq) = (0, 0);
        assert_eq!(sp_poly_eval(h.poly, w.px, w.py, &mut vp), SpStatus::Ok);
        assert_eq!(sp_poly_eval(h.poly, w.qx, w.qy, &mut vq), SpStatus::Ok);
        assert_eq!((vp, vq), (w.value, w.value));
        assert_ne!((w.px, w.py), (w.qx, w.qy));
        assert_eq!((w.px, w.py), (w.anchor_x + w.r, w.anchor_y + w.s));
        sp_cone_free(cone);
    }
}

#[test]
fn error_codes_and_messages() {
    let mut poly = ptr::null_mut();
    unsafe {
        assert_eq!(sp_poly_parse(cstr("1 2").as_ptr(), &mut poly), SpStatus::Parse);
        assert!(last_error().contains("six integers"));
        assert_eq!(sp_poly_parse(ptr::null(), &mut poly), SpStatus::NullPointer);
        assert_eq!(sp_poly_parse(cstr("1/3*x^2").as_ptr(), &mut poly), SpStatus::InvalidArgument);
    }
    let h = Handles::new("1 1 1 2 1 0", "inf");
    let mut cone = ptr::null_mut();
    let mut w = SpCollision::default();
    unsafe {
        assert_eq!(
            sp_cone_parse(cstr("0,0").as_ptr(), cstr("1,0").as_ptr(), cstr("2,0").as_ptr(), &mut cone),
            SpStatus::Degenerate
        );
        assert_eq!(
            sp_cone_parse(cstr("0,0").as_ptr(), cstr("1,0").as_ptr(), cstr("0,1").as_ptr(), &mut cone),
            SpStatus::Ok
        );
        assert_eq!(sp_find_collision(h.poly, cone, 0, &mut w), SpStatus::ZeroDiscriminant);
        sp_cone_free(cone);
        sp_poly_free(ptr::null_mut());
    }
}

#[test]
fn density_and_membership() {
    let h = Handles::new("1 1 1 2 1 0", "4/3");
    let (mut d, mut inside) = (0.0, false);
    unsafe {
        assert_eq!(sp_closed_form_density(4, -2, 1, h.sector, &mut d), SpStatus::Ok);
        assert_eq!(d, 1.0);
        assert_eq!(sp_closed_form_density(2, 0, 2, h.sector, &mut d), SpStatus::NonzeroDiscriminant);
        assert_eq!(sp_sector_contains(h.sector, 3, 4, &mut inside), SpStatus::Ok);
        assert!(inside);
        assert_eq!(sp_sector_contains(h.sector, 3, 5, &mut inside), SpStatus::Ok);
        assert!(!inside);
        let mut disc = 0;
        assert_eq!(sp_poly_discriminant(h.poly, &mut disc), SpStatus::Ok);
        assert_eq!(disc, 0);
    }
}

#[test]
fn header_declares_every_export() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/sectorpack.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .split("pub unsafe extern \"C\" fn ")
        .skip(1)
        .map(|s| s.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 12);
    for f in exports {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    for t in ["SpStatus", "SpVerifyKind", "SpVerifyResult", "SpCollision", "typedef struct SpPoly SpPoly"] {
        assert!(header.contains(t), "{t} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let Ok(status) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c", "-"])
        .arg("-I")
        .arg(dir.join("include"))
        .stdin(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut child| {
            use std::io::Write;
            child
                .stdin
                .take()
                .unwrap()
                .write_all(b"#include \"sectorpack.h\"\nint main(void) { SpPoly *p = 0; return (int)sp_poly_parse(\"1 1 1 2 1 0\", &p); }\n")?;
            child.wait()
        })
    else {
        eprintln!("no C compiler available; skipping");
        return;
    };
    assert!(status.success());
}

#[test]
fn c_program_links_against_staticlib() {
    // the static library sits next to the deps/ directory of this test binary
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libsectorpack_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("sectorpack_smoke");
    let Ok(status) = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
    else {
        eprintln!("no C compiler available; skipping");
        return;
    };
    assert!(status.success(), "C smoke program failed to build");
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
