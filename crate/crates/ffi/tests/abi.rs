use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use permkit_ffi::*;

fn last_error() -> String {
    let p = pk_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { pk_string_free(p) };
    s
}

#[test]
fn distance_and_errors() {
    let p = [1u32, 2, 3, 4];
    let q = [4u32, 3, 2, 1];
    let mut d = 0;
    assert_eq!(
        unsafe { pk_kendall_distance(p.as_ptr(), q.as_ptr(), 4, &mut d) },
        PkStatus::Ok
    );
    assert_eq!(d, 6);
    assert!(pk_last_error_message().is_null());

    let bad = [1u32, 1, 3, 4];
    let s = unsafe { pk_kendall_distance(p.as_ptr(), bad.as_ptr(), 4, &mut d) };
    assert_eq!(s, PkStatus::InvalidPermutation);
    assert!(!last_error().is_empty());

    let s = unsafe { pk_kendall_distance(ptr::null(), q.as_ptr(), 4, &mut d) };
    assert_eq!(s, PkStatus::NullPointer);
    let s = unsafe { pk_kendall_distance(p.as_ptr(), q.as_ptr(), 4, ptr::null_mut()) };
    assert_eq!(s, PkStatus::NullPointer);
}

#[test]
fn code_lifecycle() {
    let code = pk_code_new(4);
    assert!(!code.is_null());
    for w in [[1u32, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2]] {
        assert_eq!(unsafe { pk_code_push(code, w.as_ptr()) }, PkStatus::Ok);
    }
    let dup = [1u32, 2, 3, 4];
    assert_eq!(
        unsafe { pk_code_push(code, dup.as_ptr()) },
        PkStatus::InvalidArgument
    );
    let mut len = 0;
    assert_eq!(unsafe { pk_code_len(code, &mut len) }, PkStatus::Ok);
    assert_eq!(len, 3);
    let mut deg = 0;
    assert_eq!(unsafe { pk_code_degree(code, &mut deg) }, PkStatus::Ok);
    assert_eq!(deg, 4);
    let mut w = [0u32; 4];
    assert_eq!(
        unsafe { pk_code_get(code, 1, w.as_mut_ptr()) },
        PkStatus::Ok
    );
    assert_eq!(w, [2, 1, 4, 3]);
    assert_eq!(
        unsafe { pk_code_get(code, 3, w.as_mut_ptr()) },
        PkStatus::OutOfRange
    );
    let mut d = 0;
    assert_eq!(unsafe { pk_code_min_distance(code, &mut d) }, PkStatus::Ok);
    assert_eq!(d, 2);
    assert_eq!(unsafe { pk_code_verify(code, 2) }, PkStatus::Ok);
    assert_eq!(
        unsafe { pk_code_verify(code, 3) },
        PkStatus::VerificationFailed
    );
    assert!(last_error().contains("distance 2"));
    unsafe { pk_code_free(code) };
    unsafe { pk_code_free(ptr::null_mut()) };
    assert!(pk_code_new(0).is_null());
}

#[test]
fn construction_round_trip() {
    for n in 6..=20 {
        let mut target = 0;
        let code = unsafe { pk_construct_size4(n, &mut target) };
        assert!(!code.is_null());
        let mut d = 0;
        assert_eq!(unsafe { pk_code_min_distance(code, &mut d) }, PkStatus::Ok);
        assert!(d >= target);
        assert_eq!(target as usize, 2 * (n * (n - 1) / 2) / 3);
        assert_eq!(unsafe { pk_code_verify(code, target) }, PkStatus::Ok);
        unsafe { pk_code_free(code) };
    }
    assert!(unsafe { pk_construct_size4(5, ptr::null_mut()) }.is_null());
}

#[test]
fn string_results() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { pk_ball_size_decimal(4, 1, &mut out) },
        PkStatus::Ok
    );
    assert_eq!(take_string(out), "4");
    assert_eq!(
        unsafe { pk_theorem2_upper(37, 6, true, &mut out) },
        PkStatus::Ok
    );
    let table = take_string(out);
    assert_eq!(
        unsafe { pk_theorem2_upper(37, 6, false, &mut out) },
        PkStatus::Ok
    );
    let sound = take_string(out);
    assert!(sound.len() >= table.len());
    assert_eq!(
        unsafe { pk_theorem2_upper(36, 6, false, &mut out) },
        PkStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { pk_bounds_json(5, 3, false, &mut out) },
        PkStatus::Ok
    );
    let json = take_string(out);
    assert!(json.contains("\"n\": 5"));
    assert_eq!(
        unsafe { pk_bounds_json(5, 3, false, ptr::null_mut()) },
        PkStatus::NullPointer
    );
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

#[test]
fn header_declares_every_entry_point() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/permkit.h"))
            .unwrap();
    for f in [
        "pk_last_error_message",
        "pk_kendall_distance",
        "pk_code_new",
        "pk_code_free",
        "pk_code_push",
        "pk_code_len",
        "pk_code_degree",
        "pk_code_get",
        "pk_code_min_distance",
        "pk_code_verify",
        "pk_construct_size4",
        "pk_bounds_json",
        "pk_ball_size_decimal",
        "pk_theorem2_upper",
        "pk_string_free",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct PkCode PkCode;"));
    assert!(header.contains("PK_STATUS_VERIFICATION_FAILED = 6"));
}

/// Compiles and runs a small C program against the static library, when a C
/// compiler and the library are present.
#[test]
fn c_program_links_and_runs() {
    let profile = if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    };
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| workspace_root().join("target"));
    let lib = target.join(profile).join("libpermkit_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = tempfile_dir();
    let src = dir.join("smoke.c");
    std::fs::write(&src, C_SMOKE).unwrap();
    let exe = dir.join("smoke");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}");
    assert!(stdout.contains("distance 6"));
    assert!(stdout.contains("size4 ok"));
    let _ = std::fs::remove_dir_all(dir);
}

fn tempfile_dir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("permkit_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

const C_SMOKE: &str = r#"
#include <stdio.h>
#include "permkit.h"

int main(void) {
    uint32_t p[4] = {1, 2, 3, 4}, q[4] = {4, 3, 2, 1};
    uint32_t d = 0;
    if (pk_kendall_distance(p, q, 4, &d) != PK_STATUS_OK) return 1;
    printf("distance %u\n", d);
    uint32_t target = 0;
    PkCode *code = pk_construct_size4(12, &target);
    if (!code) return 2;
    if (pk_code_verify(code, target) != PK_STATUS_OK) return 3;
    pk_code_free(code);
    printf("size4 ok\n");
    char *s = NULL;
    if (pk_ball_size_decimal(5, 2, &s) != PK_STATUS_OK) return 4;
    printf("ball %s\n", s);
    pk_string_free(s);
    return 0;
}
"#;
