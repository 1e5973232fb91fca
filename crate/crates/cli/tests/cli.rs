use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn nctile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nctile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nctile-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn grow_comb_picture() {
    let comb = data("comb.tas");
    let o = nctile(&["grow", "--tas", &comb, "--radius", "3", "--out", "ascii"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.starts_with(".......\n.......\n.......\n...σ...\nBABABAB\nDCDCDCD\nDCDCDCD\n"),
        "{out}"
    );
    assert!(out.contains("truncated"));
}

#[test]
fn grow_seed_only_is_finite() {
    let o = nctile(&["grow", "--tas", &data("seedonly.tas"), "--radius", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches('σ').count(), 1);
    assert!(out.contains("finite"));
}

#[test]
fn grow_rejects_non_confluent() {
    let o = nctile(&["grow", "--tas", &data("comb-seed-north-c.tas")]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.contains("(0,1)") && out.contains("A and C"), "{out}");
}

#[test]
fn parse_errors_exit_two() {
    let bad = scratch("bad.tas");
    std::fs::write(&bad, "seed σ S=s\ntile A Q=x\n").unwrap();
    let o = nctile(&["grow", "--tas", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = nctile(&["grow", "--tas", "/nonexistent.tas"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn confluence_reports() {
    let o = nctile(&["confluence", "--tas", &data("comb.tas"), "--radius", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("confluent within radius 10"));
    let o = nctile(&[
        "confluence",
        "--tas",
        &data("comb-seed-north-c.tas"),
        "--radius",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn svg_render_is_deterministic() {
    let (a, b) = (scratch("a.svg"), scratch("b.svg"));
    for f in [&a, &b] {
        let o = nctile(&[
            "render",
            "--tas",
            &data("comb.tas"),
            "--radius",
            "3",
            "--format",
            "svg",
            "--out-file",
            f.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let sa = std::fs::read_to_string(&a).unwrap();
    assert!(sa.starts_with("<svg"));
    assert_eq!(sa, std::fs::read_to_string(&b).unwrap());
}

#[test]
fn cogrow_trace() {
    let o = nctile(&[
        "cogrow",
        "--hand",
        "right",
        "--first",
        "E|@(0,0)NES|E",
        "--second",
        "E|@(0,0)N|E",
        "--radius",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("word=NESEE"), "{out}");
    assert!(out.contains("status=periodic transient=NES period=E"));
    assert!(out.contains("2\tS\t(1,1)\t(1,0)\tf\n"));
}

#[test]
fn analyze_reports() {
    let o = nctile(&[
        "analyze",
        "periodic",
        "--tas",
        &data("comb.tas"),
        "--radius",
        "8",
    ]);
    let out = stdout(&o);
    assert!(
        out.contains("result=found\ntransient=S\nperiod=EE\nverified_depth=3\ntile_period=A,B\n"),
        "{out}"
    );
    let o = nctile(&[
        "analyze",
        "periodic",
        "--tas",
        &data("seedonly.tas"),
        "--radius",
        "4",
    ]);
    assert!(stdout(&o).contains("result=finite"));
    let o = nctile(&[
        "analyze",
        "periodic",
        "--tas",
        &data("comb-seed-north-c.tas"),
    ]);
    assert_eq!(o.status.code(), Some(3));

    let svg = scratch("otw.svg");
    let o = nctile(&[
        "analyze",
        "offthewall",
        "--path",
        "WNEES",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(stdout(&o).contains("ell=1 r=5 x0=-1 delta=2 height=1 area=6"));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<circle"));

    let o = nctile(&[
        "analyze",
        "noncausal",
        "--tas",
        &data("comb.tas"),
        "--radius",
        "3",
        "--site",
        "(1,-1)",
    ]);
    assert!(stdout(&o).contains("causal_sites=(0,-1) (0,0)\n"));
}

#[test]
fn verify_suites() {
    let args = [
        "verify",
        "--suite",
        "pumping",
        "--samples",
        "10000",
        "--seed",
        "42",
    ];
    let o = nctile(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("failures=0 result=pass"));
    assert_eq!(stdout(&o), stdout(&nctile(&args)));
    let o = nctile(&["verify", "--suite", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
}
