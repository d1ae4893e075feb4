use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use toric_np_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(tnp_last_error_message()) }.to_string_lossy().into_owned()
}

fn parse(text: &str) -> *mut TnpGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tnp_graph_parse(c.as_ptr(), &mut g) }, TnpStatus::Ok, "{}", last_error());
    g
}

#[test]
fn classify_and_betti_through_handles() {
    let g = tnp_graph_complete(5, 5);
    unsafe {
        assert_eq!(tnp_graph_num_vertices(g), 10);
        assert_eq!(tnp_graph_num_edges(g), 25);
        let mut level = TnpLevel::N1;
        assert_eq!(tnp_classify(g, 0, &mut level), TnpStatus::Ok);
        assert_eq!(level, TnpLevel::N3);
        assert_eq!(tnp_classify(g, 3, &mut level), TnpStatus::Ok);
        assert_eq!(level, TnpLevel::N2);
        let mut b = 0u64;
        assert_eq!(tnp_betti_number(g, 0, 2, 0, 0, &mut b), TnpStatus::Ok);
        assert_eq!(b, 100);
        tnp_graph_free(g);
    }
}

#[test]
fn json_outputs_are_owned_strings() {
    let g = parse("X: x1 x2 x3\nY: y1 y2 y3\nx1 y1\nx1 y2\nx2 y2\nx2 y3\nx3 y3\nx3 y1\n");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(tnp_classify_json(g, 0, &mut s), TnpStatus::Ok);
        let json = CStr::from_ptr(s).to_str().unwrap().to_string();
        tnp_string_free(s);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["level"], "Fails_N1");
        assert_eq!(v["certificate"]["kind"], "chordless_cycle");

        let mut t = ptr::null_mut();
        assert_eq!(tnp_betti_table_json(g, 1, 3, 0, 0, &mut t), TnpStatus::Ok);
        let table: serde_json::Value = serde_json::from_str(CStr::from_ptr(t).to_str().unwrap()).unwrap();
        tnp_string_free(t);
        // the six-cycle binomial is the only generator
        assert_eq!(table["entries"], serde_json::json!([{"i": 0, "j": 3, "value": 1}]));
        tnp_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let bad = CString::new("X: a b\nY: c\na b\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(tnp_graph_parse(bad.as_ptr(), &mut g), TnpStatus::Parse);
        assert!(last_error().contains("same side"));
        assert!(g.is_null());
        assert_eq!(tnp_graph_parse(ptr::null(), &mut g), TnpStatus::NullPointer);

        let path = parse("X: a b\nY: c\na c\nb c\n");
        let mut level = TnpLevel::N1;
        assert_eq!(tnp_classify(path, 0, &mut level), TnpStatus::ZeroIdeal);
        assert_eq!(tnp_classify(path, 4, &mut level), TnpStatus::InvalidArgument);
        assert_eq!(tnp_classify(ptr::null(), 0, &mut level), TnpStatus::NullPointer);
        tnp_graph_free(path);

        let k33 = tnp_graph_complete(3, 3);
        let mut b = 0u64;
        assert_eq!(tnp_betti_number(k33, 3, 6, 0, 2, &mut b), TnpStatus::ResourceLimit);
        assert!(last_error().contains("cap"));
        tnp_graph_free(k33);
        tnp_graph_free(ptr::null_mut());
        tnp_string_free(ptr::null_mut());
    }
}

#[test]
fn polyomino_handles() {
    unsafe {
        let mut p = ptr::null_mut();
        let l = CString::new("##\n#.\n").unwrap();
        assert_eq!(tnp_polyomino_parse(l.as_ptr(), &mut p), TnpStatus::Ok);
        let mut level = TnpLevel::N1;
        assert_eq!(tnp_polyomino_classify(p, 0, &mut level), TnpStatus::Ok);
        assert_eq!(level, TnpLevel::N2);
        tnp_polyomino_free(p);

        let u = CString::new("#.#\n###\n").unwrap();
        assert_eq!(tnp_polyomino_parse(u.as_ptr(), &mut p), TnpStatus::Ok);
        assert_eq!(tnp_polyomino_classify(p, 0, &mut level), TnpStatus::InvalidArgument);
        assert!(last_error().contains("row 2"));
        tnp_polyomino_free(p);

        let split = CString::new("#\n.\n#\n").unwrap();
        assert_eq!(tnp_polyomino_parse(split.as_ptr(), &mut p), TnpStatus::Parse);
    }
}

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/toric_np.h")
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(header()).unwrap();
    for name in [
        "tnp_graph_parse",
        "tnp_graph_free",
        "tnp_classify",
        "tnp_betti_table_json",
        "tnp_polyomino_classify",
        "tnp_string_free",
        "tnp_last_error_message",
        "TNP_STATUS_RESOURCE_LIMIT",
        "TNP_LEVEL_N_INF",
        "typedef struct TnpGraph TnpGraph",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "toric_np.h"

int main(void) {
    TnpGraph *g = NULL;
    const char *text = "X: x1 x2 x3\nY: y1 y2 y3\nx1 y1\nx1 y2\nx1 y3\nx2 y1\nx2 y2\nx2 y3\nx3 y1\nx3 y2\n";
    if (tnp_graph_parse(text, &g) != TNP_STATUS_OK) return 10;
    TnpLevel level;
    if (tnp_classify(g, 0, &level) != TNP_STATUS_OK || level != TNP_LEVEL_N2) return 11;
    uint64_t b = 0;
    if (tnp_betti_number(g, 2, 5, 0, 0, &b) != TNP_STATUS_OK || b != 1) return 12;
    char *json = NULL;
    if (tnp_betti_table_json(g, 2, 5, 0, 0, &json) != TNP_STATUS_OK) return 13;
    printf("%s\n", json);
    tnp_string_free(json);
    tnp_graph_free(g);
    if (tnp_graph_parse("X: a\nY: a\n", &g) != TNP_STATUS_PARSE) return 14;
    if (strlen(tnp_last_error_message()) == 0) return 15;
    return 0;
}
"#;

/// Compiles and runs a C client against the static library, when a C
/// compiler is on the PATH.
#[test]
fn c_client_links_and_runs() {
    let Ok(exe) = std::env::current_exe() else { return };
    // target/<profile>/deps/<test binary>
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libtoric_np_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library at {} or no C compiler", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let bin = dir.path().join("client");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C client failed to compile");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["entries"].as_array().unwrap().len(), 3);
}
