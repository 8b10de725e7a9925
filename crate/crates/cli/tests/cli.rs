use std::path::PathBuf;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sginertia::format::parse_sg;
use sginertia_cli::{analyze_text, cmd_family, contract_text, FamilyKind};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sginertia"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sginertia-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_balanced_c4_file() {
    let path = write_temp("c4.sg", "# balanced square\n4 4\n0 1 +\n1 2 +\n2 3 +\n0 3 +\n");
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(1,1,2)"), "{text}");
    let row = |key: &str| {
        let line = text.lines().find(|l| l.trim_start().starts_with(key)).unwrap();
        line[line.find(key).unwrap() + key.len()..].trim().to_string()
    };
    assert_eq!(row("extremal family"), "true");
    assert_eq!(row("component balance"), "balanced");
    assert_eq!(row("cycle-disjoint"), "true");
}

#[test]
fn analyze_reports_parse_location() {
    let path = write_temp("loop.sg", "3 2\n0 1 +\n0 0 +\n");
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("loop.sg:3:3: self-loop"), "{err}");
}

#[test]
fn missing_file_is_not_a_negative_result() {
    let out = run(&["analyze", "/nonexistent/graph.sg"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["contract", "/nonexistent/graph.sg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &[][..],
        &["frobnicate"],
        &["family", "cycle", "2"],
        &["family", "star", "4"],
        &["family", "cycle", "-3"],
        &["verify", "--max-n", "9"],
        &["verify", "--max-n", "8"],
        &["verify", "--max-n", "1"],
        &["verify", "--all", "--connected-only"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_exit_codes_and_report_file() {
    let out = run(&["verify", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("   2          1            1"));

    let report = write_temp("report.txt", "");
    let out = run(&["verify", "--max-n", "5", "--seed", "7", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("equality census"));
    let records = std::fs::read_to_string(&report).unwrap();
    assert!(records.starts_with("summary max_n=5 connected_only=true "));
    assert!(records.contains("order n=5 skeletons=21 "));
    assert!(!records.contains("violation "));

    let out = run(&["verify", "--max-n", "4", "--all", "--machine"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("order n=4 skeletons=11 "));
}

#[test]
fn family_outputs() {
    let out = run(&["family", "cycle", "6", "--unbalanced"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# C6(unbalanced)\n# formula inertia (2,2,2)\n# computed inertia (2,2,2)\n6 6\n"), "{text}");
    let out = run(&["family", "path", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "# P1\n# formula inertia (0,0,1)\n# computed inertia (0,0,1)\n1 0\n");
}

#[test]
fn contract_outputs() {
    let bowtie = write_temp("bowtie.sg", "5 6\n0 1 +\n0 2 +\n1 2 +\n2 3 +\n2 4 +\n3 4 -\n");
    let out = run(&["contract", bowtie.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let chain = write_temp(
        "chain.sg",
        "8 9\n0 1 +\n1 2 +\n0 2 -\n2 3 +\n3 4 +\n4 5 +\n5 6 +\n3 6 +\n6 7 +\n",
    );
    let out = run(&["contract", chain.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "nodes 3 edges 2\nnode 0 C3-[0 1 2]\nnode 1 C4+[3 4 5 6]\nnode 2 v7\nedge 0 1\nedge 1 2\n"
    );
}

/// Every family member, written out and analyzed again, reproduces the
/// inertia printed by the generator.
#[test]
fn family_round_trip_through_analyze() {
    let mut cases = Vec::new();
    for n in 3..=20 {
        cases.push((FamilyKind::Cycle, n, false));
        cases.push((FamilyKind::Cycle, n, true));
    }
    for n in 2..=20 {
        cases.push((FamilyKind::Path, n, false));
    }
    for (kind, n, unbalanced) in cases {
        let family = cmd_family(kind, n, unbalanced);
        assert_eq!(family.exit_code, 0);
        let computed = family
            .stdout
            .lines()
            .find_map(|l| l.strip_prefix("# computed inertia "))
            .unwrap()
            .to_string();
        let analysis = analyze_text(&family.stdout, "family", true);
        assert_eq!(analysis.exit_code, 0, "{}", analysis.stderr);
        assert!(analysis.stdout.contains(&format!(" inertia={computed} ")), "{kind:?} {n}");
    }
}

#[test]
fn round_trip_through_the_binary() {
    let out = run(&["family", "cycle", "9", "--unbalanced"]);
    let path = write_temp("c9.sg", &stdout(&out));
    let out = run(&["analyze", "--machine", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(" inertia=(4,5,0) "));
}

const ALPHABET: &[u8] = b"0123456789 +-#\nxq,;\t-+ 0 1 2";

fn mutate(rng: &mut ChaCha8Rng, text: &str) -> String {
    let mut bytes = text.as_bytes().to_vec();
    for _ in 0..rng.gen_range(1..4) {
        let pos = rng.gen_range(0..=bytes.len());
        match rng.gen_range(0..3) {
            0 if pos < bytes.len() => {
                bytes.remove(pos);
            }
            1 if pos < bytes.len() => bytes[pos] = ALPHABET[rng.gen_range(0..ALPHABET.len())],
            _ => bytes.insert(pos, ALPHABET[rng.gen_range(0..ALPHABET.len())]),
        }
    }
    String::from_utf8_lossy(&bytes).into_owned()
}

/// Malformed documents exit 2, whatever the command; well-formed mutants
/// are accepted or rejected on mathematical grounds only.
#[test]
fn fuzzed_documents_respect_exit_codes() {
    let seeds = [
        "4 4\n0 1 +\n1 2 +\n2 3 +\n0 3 +\n",
        "5 6\n0 1 +\n0 2 +\n1 2 +\n2 3 +\n2 4 +\n3 4 -\n",
        "# c\n3 2\n0 1 -\n1 2 +\n",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xf022);
    let mut malformed = 0;
    for i in 0..6000 {
        let text = if i % 3 == 0 {
            let len = rng.gen_range(0..40);
            (0..len).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())] as char).collect()
        } else {
            mutate(&mut rng, seeds[i % seeds.len()])
        };
        let parsed = parse_sg(&text);
        let analysis = analyze_text(&text, "fuzz", i % 2 == 0);
        let contraction = contract_text(&text, "fuzz");
        match parsed {
            Err(_) => {
                malformed += 1;
                assert_eq!(analysis.exit_code, 2, "{text:?}");
                assert_eq!(contraction.exit_code, 2, "{text:?}");
                assert!(analysis.stdout.is_empty());
            }
            Ok(g) => {
                let expected = if g.order() < 2 { 2 } else { 0 };
                assert_eq!(analysis.exit_code, expected, "{text:?}: {}", analysis.stderr);
            }
        }
    }
    assert!(malformed > 3000, "{malformed}");
}

#[test]
fn garbage_files_through_the_binary() {
    let garbage = ["", "\u{0}\u{1}", "3 3\n0 1 +\n", "2 1\n0 1 ±\n", "x y\n", "2 1 0\n0 1 +\n", "99999999999999999999999 0\n"];
    for (i, text) in garbage.iter().enumerate() {
        let path = write_temp(&format!("garbage{i}.sg"), text);
        for cmd in ["analyze", "contract"] {
            let out = run(&[cmd, path.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(2), "{cmd} {text:?}");
        }
    }
}
