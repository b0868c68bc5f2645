use std::collections::BTreeMap;
use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use vkt::json::{code_from_json, link_from_json, poly_from_json};
use vkt_core::transform::{random_move_walk, RandomWalkConfig};
use vkt_core::{GaussCode, LaurentPoly};

fn vkt(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("vkt").chain(args.iter().copied());
    let status = vkt::run(argv, &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (status, out, err) = vkt(args);
    assert_eq!(status, 0, "{args:?}: {err}");
    out
}

fn poly(s: &str) -> LaurentPoly {
    s.trim().parse().unwrap()
}

/// `key: value` lines, with indented continuation lines joined by newlines.
fn parse_text(text: &str) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    let mut open: Option<String> = None;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("  ") {
            let key = open.clone().expect("continuation without key");
            let slot: &mut String = map.entry(key).or_default();
            if !slot.is_empty() {
                slot.push('\n');
            }
            slot.push_str(rest);
            continue;
        }
        let (k, v) = line.split_once(':').expect("key: value");
        open = Some(k.to_string());
        map.insert(k.to_string(), v.trim_start().to_string());
    }
    map
}

/// Flatten JSON to the text rendering, decoding each leaf by its key.
fn flatten(prefix: &str, v: &Value, out: &mut BTreeMap<String, String>) {
    let obj = v.as_object().expect("object");
    for (k, v) in obj {
        let key = format!("{prefix}{k}");
        let text = match k.as_str() {
            "code" | "mutant" | "canonical" => code_from_json(v).unwrap().to_string(),
            "wriggle" | "affine" | "odd-wriggle" | "before" | "after" | "polynomial" | "K" | "MK" => {
                poly_from_json(v).unwrap().to_string()
            }
            "link" => {
                let l = link_from_json(v).unwrap();
                let side = |es: &[vkt_core::GaussEntry]| es.iter().map(|e| e.to_string()).collect::<String>();
                format!("{} | {}", side(&l.first), side(&l.second))
            }
            "labels" => v.as_array().unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
            "weights" | "parity" => v
                .as_object()
                .unwrap()
                .iter()
                .map(|(c, x)| format!("{c}={}", x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string())))
                .collect::<Vec<_>>()
                .join(" "),
            _ => match v {
                Value::Object(_) => {
                    flatten(&format!("{key}."), v, out);
                    continue;
                }
                Value::Array(items) => items.iter().map(|x| x.as_str().unwrap()).collect::<Vec<_>>().join("\n"),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            },
        };
        out.insert(key, text);
    }
}

fn assert_round_trip(args: &[&str]) {
    let (status, text, _) = vkt(args);
    assert!(!text.is_empty(), "{args:?}");
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let (json_status, json, _) = vkt(&json_args);
    assert_eq!(status, json_status);
    let json: Value = serde_json::from_str(&json).unwrap();
    let mut from_json = BTreeMap::new();
    flatten("", &json, &mut from_json);
    let from_text = if from_json.len() == 1 {
        let key = from_json.keys().next().unwrap().clone();
        BTreeMap::from([(key, text.trim_end().to_string())])
    } else {
        parse_text(&text)
    };
    assert_eq!(from_text, from_json, "{args:?}");
}

#[test]
fn virtual_trefoil_polynomial() {
    assert_eq!(ok(&["invariant", "--poly", "wriggle", "O1+O2+U1+U2+"]), "t^-1 - 2 + t\n");
}

#[test]
fn family_member_polynomial() {
    let out = parse_text(&ok(&["family", "--base", "K1", "--n", "5"]));
    assert_eq!(poly(&out["polynomial"]), poly("3t + 3t^-1 - 6"));
    let code: GaussCode = out["code"].parse().unwrap();
    assert!(code.validate().is_ok());
    assert_eq!(code.crossing_count(), 9);
}

#[test]
fn fuzz_passes_and_is_deterministic() {
    let args = ["fuzz", "--trials", "100", "--steps", "20", "--seed", "7", "O1+O2+U1+U2+"];
    let (status, first, _) = vkt(&args);
    assert_eq!(status, 0);
    assert!(first.contains("violations: 0"));
    assert_eq!(vkt(&args).1, first);
}

#[test]
fn text_and_json_carry_the_same_data() {
    let cases: &[&[&str]] = &[
        &["invariant", "--poly", "wriggle", "O1+O2+U1+U2+"],
        &["invariant", "--poly", "affine", "--poly", "odd-wriggle", "--weights", "--parity", "--vassiliev", "2", "K1"],
        &["invariant", "--odd-writhe", "--writhe", "--cross-check", "figure_eight"],
        &["invariant", "four_crossing"],
        &["parse", "O1+U2+O3-U1+O2+U3-"],
        &["parse", "O1+O1+"],
        &["family", "--base", "MK2", "--n", "4"],
        &["mutate", "--blocks", "0..2,5..7", "--kind", "rotation", "K1"],
        &["mutate", "O1+U2+O3-U1+O2+U3-"],
        &["transform", "twist", "K1", "C1"],
        &["transform", "smooth", "K1", "A"],
        &["transform", "r3", "O1+O2+U1+O3+U2+U3+"],
        &["fuzz", "--trials", "5", "--seed", "3", "K1"],
        &["report", "--max-n", "4"],
    ];
    for args in cases {
        assert_round_trip(args);
    }
    assert_round_trip(&["transform", "mirror", "K2"]);
}

#[test]
fn cross_check_only_adds_a_field() {
    let plain = parse_text(&ok(&["invariant", "--poly", "affine", "--weights", "MK1"]));
    let mut checked = parse_text(&ok(&["invariant", "--poly", "affine", "--weights", "--cross-check", "MK1"]));
    assert_eq!(checked.remove("cross_check.agree").as_deref(), Some("true"));
    assert_eq!(plain, checked);
}

#[test]
fn labels_and_weights_of_the_labelled_trefoil() {
    let out = parse_text(&ok(&["invariant", "--weights", "labelled_trefoil"]));
    assert_eq!(out["labels"], "-1 0 1 2 1 0");
    assert_eq!(out["weights"], "1=-2 2=2 3=0");
}

#[test]
fn vassiliev_values() {
    assert_eq!(ok(&["invariant", "--vassiliev", "2", "K1"]), "1\n");
    assert_eq!(ok(&["invariant", "--vassiliev", "2", "MK1"]), "-7\n");
    assert_eq!(ok(&["invariant", "--vassiliev", "4", "O1+O2+U1+U2+"]), "1/12\n");
}

#[test]
fn exit_statuses() {
    let (s, _, err) = vkt(&["invariant", "O1+U2"]);
    assert_eq!(s, 1);
    assert!(err.contains("position 5"), "{err}");
    assert_eq!(vkt(&["invariant", "O1+O2+"]).0, 1);
    assert_eq!(vkt(&["transform", "twist", "K1", "Z"]).0, 1);
    assert_eq!(vkt(&["mutate", "--blocks", "0..1,2..3", "K1"]).0, 1);
    assert_eq!(vkt(&["family", "--base", "K1", "--n", "4"]).0, 1);
    assert_eq!(vkt(&["mutate", "--blocks", "0-1", "K1"]).0, 2);
    assert_eq!(vkt(&["invariant", "--vassiliev", "0", "K1"]).0, 2);
    assert_eq!(vkt(&["family", "--base", "K7", "--n", "1"]).0, 2);
    assert_eq!(vkt(&["transform", "moves", "K1", "--replay", "/nonexistent/log"]).0, 1);
    assert_eq!(vkt(&[]).0, 2);
    assert_eq!(vkt(&["--help"]).0, 0);
}

#[test]
fn transforms_compose() {
    let mirrored = ok(&["transform", "mirror", "K1"]);
    let original = &parse_text(&ok(&["parse", "K1"]))["code"];
    assert_eq!(ok(&["transform", "mirror", mirrored.trim()]).trim(), original);
    let sum = ok(&["transform", "connsum", "O1+O2+U1+U2+", "O1+O2+U1+U2+"]);
    assert_eq!(ok(&["invariant", sum.trim()]), "2t^-1 - 4 + 2t\n");
    let changed = ok(&["transform", "crossing-change", "O1+O2+U1+U2+", "1"]);
    assert_eq!(changed, "U1-O2+O1-U2+\n");
    let kinked = ok(&["transform", "r1", "O1+O2+U1+U2+", "--at", "2", "--sign", "-", "--order", "uo"]);
    assert_eq!(ok(&["invariant", kinked.trim()]), "t^-1 - 2 + t\n");
    assert_eq!(ok(&["transform", "r1", kinked.trim()]), "3\n");
    assert_eq!(ok(&["transform", "r1", kinked.trim(), "--remove", "3"]), "O1+O2+U1+U2+\n");
    let bigon = ok(&["transform", "r2", "O1+O2+U1+U2+", "--at", "1,3", "--passage", "under"]);
    assert_eq!(ok(&["invariant", bigon.trim()]), "t^-1 - 2 + t\n");
    assert_eq!(ok(&["transform", "r2", bigon.trim(), "--remove", "3,4"]), "O1+O2+U1+U2+\n");
}

#[test]
fn r3_sites_are_listed_and_applied() {
    let code = "O1+O2+U1+O3+U2+U3+";
    let sites = ok(&["transform", "r3", code]);
    let first = sites.lines().next().expect("an R3 site").replace(' ', ",");
    let moved = ok(&["transform", "r3", code, "--site", &first]);
    assert_eq!(ok(&["invariant", moved.trim()]), ok(&["invariant", code]));
    assert_eq!(ok(&["transform", "r3", moved.trim(), "--site", &first]), format!("{code}\n"));
}

#[test]
fn move_logs_replay() {
    let code: GaussCode = "O1+O2+U1+U2+".parse().unwrap();
    let walk = random_move_walk(&code, &RandomWalkConfig { steps: 15, seed: 42, ..Default::default() }).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("walk.log");
    let body: String = walk.log.iter().map(|m| format!("{m}\n")).collect();
    std::fs::write(&path, format!("# a comment\n{body}")).unwrap();
    let out = parse_text(&ok(&["transform", "moves", "O1+O2+U1+U2+", "--replay", path.to_str().unwrap()]));
    assert_eq!(out["code"], walk.code.to_string());
    assert_eq!(out["moves"], walk.log.len().to_string());
}

#[test]
fn report_reads_rotation_detected_for_every_row() {
    let out = parse_text(&ok(&["report", "--max-n", "15"]));
    for n in 1..=15 {
        assert_eq!(out[&format!("n{n}.rotation")], "true");
        assert_eq!(out[&format!("n{n}.reflection")], "false");
    }
    assert_eq!(poly(&out["n5.K"]), poly("3t + 3t^-1 - 6"));
}

#[test]
fn binary_honours_fixture_override_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("mine.gauss"), "# custom\nO1+O2+U1+U2+\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_vkt"))
        .args(["invariant", "mine"])
        .env("VKT_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "t^-1 - 2 + t\n");

    let mut child = Command::new(env!("CARGO_BIN_EXE_vkt"))
        .args(["parse", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"O1+ U1+").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("valid: true"));

    let bad = Command::new(env!("CARGO_BIN_EXE_vkt")).args(["mutate", "--kind", "sideways", "K1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
