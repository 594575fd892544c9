use std::ffi::{CStr, CString};
use std::ptr;

use hurwitz_ga_ffi::*;

fn parse(p: u32, q: u32, text: &str) -> *mut HgMultivector {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hg_multivector_parse(p, q, c.as_ptr(), &mut out) }, HgStatus::Ok);
    out
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hg_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hg_last_error_message()) }.to_str().unwrap().to_string()
}

#[test]
fn products_and_strings() {
    let x = parse(3, 0, "e1 + e123");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hg_octonion_norm(x, HgVariant::Plus, &mut s) }, HgStatus::Ok);
    assert_eq!(take_string(s), "2");

    let e1 = parse(3, 0, "e1");
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { hg_bullet_product(e1, e1, HgVariant::Plus, &mut p) }, HgStatus::Ok);
    assert_eq!(unsafe { hg_multivector_to_string(p, &mut s) }, HgStatus::Ok);
    assert_eq!(take_string(s), "-1");

    let mut r = ptr::null_mut();
    assert_eq!(unsafe { hg_involution(x, HgInvolution::Reversion, &mut r) }, HgStatus::Ok);
    assert_eq!(unsafe { hg_multivector_to_string(r, &mut s) }, HgStatus::Ok);
    assert_eq!(take_string(s), "1*e1 - 1*e123");

    unsafe {
        hg_multivector_free(x);
        hg_multivector_free(e1);
        hg_multivector_free(p);
        hg_multivector_free(r);
    }
}

#[test]
fn coefficients_in_even_first_order() {
    let nums = [1i64, 2, 0, 0, 0, 0, 0, -1];
    let dens = [1i64, 3, 1, 1, 1, 1, 1, 1];
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { hg_multivector_from_coeffs(3, 0, nums.as_ptr(), dens.as_ptr(), &mut m) }, HgStatus::Ok);
    let expected = parse(3, 0, "1 + 2/3*e12 - e123");
    let mut eq = false;
    assert_eq!(unsafe { hg_multivector_equal(m, expected, &mut eq) }, HgStatus::Ok);
    assert!(eq);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hg_multivector_to_json(m, &mut s) }, HgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["coeffs"][1], "2/3");

    let bad_dens = [0i64; 8];
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { hg_multivector_from_coeffs(3, 0, nums.as_ptr(), bad_dens.as_ptr(), &mut out) },
        HgStatus::InvalidArgument
    );
    unsafe {
        hg_multivector_free(m);
        hg_multivector_free(expected);
    }
}

#[test]
fn error_codes() {
    let text = CString::new("2*e4").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hg_multivector_parse(3, 0, text.as_ptr(), &mut out) }, HgStatus::ParseError);
    assert!(last_error().contains("e4"));
    assert!(out.is_null());

    assert_eq!(unsafe { hg_multivector_parse(3, 0, ptr::null(), &mut out) }, HgStatus::NullPointer);

    let a = parse(3, 0, "e1");
    let b = parse(0, 3, "e1");
    assert_eq!(unsafe { hg_geometric_product(a, b, &mut out) }, HgStatus::SignatureMismatch);
    assert_eq!(unsafe { hg_geometric_product(a, a, ptr::null_mut()) }, HgStatus::NullPointer);

    let mut cls = HgClass::R;
    assert_eq!(unsafe { hg_classify(3, 0, HgVariant::Plus, &mut cls) }, HgStatus::Ok);
    assert_eq!(cls, HgClass::O);
    assert!(last_error().is_empty());
    unsafe {
        hg_multivector_free(a);
        hg_multivector_free(b);
        hg_multivector_free(ptr::null_mut());
        hg_string_free(ptr::null_mut());
    }
}

#[test]
fn tables() {
    let spec = CString::new("ga:0,3").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { hg_table_build(spec.as_ptr(), &mut t) }, HgStatus::Ok);
    assert_eq!(unsafe { hg_table_dim(t) }, 8);
    let (mut k, mut s) = (0usize, 0i8);
    assert_eq!(unsafe { hg_table_entry(t, 1, 1, &mut k, &mut s) }, HgStatus::Ok);
    assert_eq!((k, s), (0, -1));
    assert_eq!(unsafe { hg_table_entry(t, 8, 0, &mut k, &mut s) }, HgStatus::InvalidArgument);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hg_table_to_csv(t, &mut out) }, HgStatus::Ok);
    assert!(take_string(out).starts_with(",1,e1,e2,e3,e12,e23,e13,e123"));
    assert_eq!(unsafe { hg_table_to_json(t, &mut out) }, HgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["dim"], 8);

    let bad = CString::new("bullet:3,0").unwrap();
    let mut none = ptr::null_mut();
    assert_eq!(unsafe { hg_table_build(bad.as_ptr(), &mut none) }, HgStatus::ParseError);
    assert_eq!(unsafe { hg_table_dim(ptr::null()) }, 0);
    unsafe { hg_table_free(t) };
}

#[test]
fn isomorphism_search() {
    let build = |s: &str| {
        let c = CString::new(s).unwrap();
        let mut t = ptr::null_mut();
        assert_eq!(unsafe { hg_table_build(c.as_ptr(), &mut t) }, HgStatus::Ok);
        t
    };
    let (even, h, o) = (build("ga:3,0"), build("H"), build("O"));
    let bullet = build("bullet:0,3:-");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hg_find_isomorphism(bullet, o, &mut out) }, HgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["target"], "O");
    assert_eq!(unsafe { hg_find_isomorphism(even, h, &mut out) }, HgStatus::InvalidArgument);
    unsafe {
        for t in [even, h, o, bullet] {
            hg_table_free(t);
        }
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(hg_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
