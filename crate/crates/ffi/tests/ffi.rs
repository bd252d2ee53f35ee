use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use argkit_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { argkit_string_free(p) };
    s
}

fn last_error() -> String {
    let p = argkit_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn parse(apx: &str) -> *mut ArgkitFramework {
    let mut fw = ptr::null_mut();
    let status = unsafe { argkit_framework_from_apx(c(apx).as_ptr(), &mut fw) };
    assert_eq!(status, ArgkitStatus::Ok);
    fw
}

const TRIANGLE: &str = "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\natt(c,a).\n";

#[test]
fn parse_enumerate_and_free() {
    let fw = parse("arg(a).\narg(b).\natt(a,b).\natt(b,a).\n");
    assert_eq!(unsafe { argkit_framework_len(fw) }, 2);
    let mut out = ptr::null_mut();
    let status = unsafe { argkit_extensions(fw, c("prf").as_ptr(), &mut out) };
    assert_eq!(status, ArgkitStatus::Ok);
    assert_eq!(take_string(out), "[a]\n[b]\n");
    unsafe { argkit_framework_free(fw) };
}

#[test]
fn acceptance_queries() {
    let fw = parse(TRIANGLE);
    let mut answer = true;
    let status = unsafe { argkit_accept(fw, c("prf").as_ptr(), c("a").as_ptr(), false, &mut answer) };
    assert_eq!(status, ArgkitStatus::Ok);
    assert!(!answer);
    let status = unsafe { argkit_accept(fw, c("stg").as_ptr(), c("a").as_ptr(), false, &mut answer) };
    assert_eq!(status, ArgkitStatus::Ok);
    assert!(answer);
    unsafe { argkit_framework_free(fw) };
}

#[test]
fn classes_and_distance() {
    let fw = parse(TRIANGLE);
    let mut member = true;
    assert_eq!(unsafe { argkit_is_member(fw, c("acy").as_ptr(), &mut member) }, ArgkitStatus::Ok);
    assert!(!member);
    assert_eq!(unsafe { argkit_is_member(fw, c("NOEVEN").as_ptr(), &mut member) }, ArgkitStatus::Ok);
    assert!(member);
    let mut k = 0usize;
    let mut set = ptr::null_mut();
    assert_eq!(unsafe { argkit_distance(fw, c("acy").as_ptr(), &mut k, &mut set) }, ArgkitStatus::Ok);
    assert_eq!(k, 1);
    assert_eq!(take_string(set), "[a]");
    unsafe { argkit_framework_free(fw) };
}

#[test]
fn round_trip_through_apx() {
    let fw = parse("arg(b).\narg(a).\natt(b,a).\natt(a,a).\n");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { argkit_framework_to_apx(fw, &mut out) }, ArgkitStatus::Ok);
    assert_eq!(take_string(out), "arg(b).\narg(a).\natt(a,a).\natt(b,a).\n");
    unsafe { argkit_framework_free(fw) };
}

#[test]
fn tgf_input() {
    let mut fw = ptr::null_mut();
    let status = unsafe { argkit_framework_from_tgf(c("1\n2\n#\n1 2\n").as_ptr(), &mut fw) };
    assert_eq!(status, ArgkitStatus::Ok);
    assert_eq!(unsafe { argkit_framework_len(fw) }, 2);
    unsafe { argkit_framework_free(fw) };
}

#[test]
fn reductions() {
    let qdimacs = c("p cnf 3 2\na 3 0\ne 1 2 0\n1 2 3 0\n-1 -2 -3 0\n");
    let mut fw = ptr::null_mut();
    let status = unsafe { argkit_reduce(qdimacs.as_ptr(), 1, ptr::null(), ptr::null(), &mut fw) };
    assert_eq!(status, ArgkitStatus::Ok);
    assert_eq!(unsafe { argkit_framework_len(fw) }, 11);
    let mut answer = false;
    let status = unsafe { argkit_accept(fw, c("prf").as_ptr(), c("phi").as_ptr(), true, &mut answer) };
    assert_eq!(status, ArgkitStatus::Ok);
    assert!(answer);
    unsafe { argkit_framework_free(fw) };

    let dimacs = c("p cnf 2 1\n1 2 0\n");
    let mut fw = ptr::null_mut();
    let status = unsafe { argkit_reduce(dimacs.as_ptr(), 5, c("literal").as_ptr(), c("1").as_ptr(), &mut fw) };
    assert_eq!(status, ArgkitStatus::Ok);
    unsafe { argkit_framework_free(fw) };

    let status = unsafe { argkit_reduce(dimacs.as_ptr(), 5, ptr::null(), ptr::null(), &mut fw) };
    assert_eq!(status, ArgkitStatus::NullPointer);
    let status = unsafe { argkit_reduce(qdimacs.as_ptr(), 9, ptr::null(), ptr::null(), &mut fw) };
    assert_eq!(status, ArgkitStatus::Usage);
}

#[test]
fn error_codes_and_messages() {
    let mut fw = ptr::null_mut();
    let status = unsafe { argkit_framework_from_apx(c("att(a,b).").as_ptr(), &mut fw) };
    assert_eq!(status, ArgkitStatus::Parse);
    assert!(fw.is_null());
    assert!(last_error().contains("line 1"));

    let status = unsafe { argkit_framework_from_apx(ptr::null(), &mut fw) };
    assert_eq!(status, ArgkitStatus::NullPointer);

    let bad = [0xffu8, 0];
    let status = unsafe { argkit_framework_from_apx(bad.as_ptr().cast(), &mut fw) };
    assert_eq!(status, ArgkitStatus::InvalidUtf8);

    let fw = parse(TRIANGLE);
    let mut out = ptr::null_mut();
    let status = unsafe { argkit_extensions(fw, c("ideal").as_ptr(), &mut out) };
    assert_eq!(status, ArgkitStatus::Usage);
    let mut answer = false;
    let status = unsafe { argkit_accept(fw, c("prf").as_ptr(), c("zz").as_ptr(), true, &mut answer) };
    assert_eq!(status, ArgkitStatus::Usage);
    assert!(last_error().contains("zz"));
    unsafe { argkit_framework_free(fw) };

    let args: String = (0..30).map(|i| format!("arg(a{i}).\n")).collect();
    let big = parse(&args);
    let status = unsafe { argkit_extensions(big, c("prf").as_ptr(), &mut out) };
    assert_eq!(status, ArgkitStatus::Capacity);
    unsafe { argkit_framework_free(big) };

    assert_eq!(unsafe { argkit_framework_len(ptr::null()) }, 0);
    unsafe { argkit_framework_free(ptr::null_mut()) };
    unsafe { argkit_string_free(ptr::null_mut()) };
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/argkit.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "argkit_last_error",
        "argkit_framework_from_apx",
        "argkit_framework_from_tgf",
        "argkit_framework_free",
        "argkit_framework_len",
        "argkit_framework_to_apx",
        "argkit_string_free",
        "argkit_extensions",
        "argkit_accept",
        "argkit_is_member",
        "argkit_distance",
        "argkit_reduce",
        "typedef struct ArgkitFramework ArgkitFramework",
        "ARGKIT_STATUS_CAPACITY = 3",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // the header must also be valid C when a compiler is around
    if let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99"])
        .arg(&header)
        .status()
    {
        assert!(status.success());
    }
}
