use std::path::Path;
use std::process::{Command, Output};

use trifold::geometry::{point_in_polygon, Point};
use trifold::suffridge::corner_point;

fn trifold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trifold")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn parse_domain_csv(text: &str) -> Vec<(String, f64, f64, f64)> {
    text.lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            (f[0].to_string(), f[1].parse().unwrap(), f[2].parse().unwrap(), f[3].parse().unwrap())
        })
        .collect()
}

#[test]
fn suffridge_table() {
    let out = trifold(&["suffridge", "--T", "1", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "j,exponent,coefficient\n1,1,1.00000000000\n2,2,0.942809041582\n3,3,0.333333333333\n"
    );
}

#[test]
fn domain_csv_is_closed_polyline() {
    let out = trifold(&["domain", "--T", "1", "--samples", "256", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("segment,t,x,y\n"));
    let rows = parse_domain_csv(&text);
    assert_eq!(rows.len(), 5 * 256);
    let (first, last) = (&rows[0], &rows[rows.len() - 1]);
    assert!((first.2 - last.2).abs() < 1e-11 && (first.3 - last.3).abs() < 1e-11);
    for kind in ["Gamma1", "Gamma2Plus", "Gamma2Minus", "Gamma3Plus", "Gamma3Minus"] {
        assert_eq!(rows.iter().filter(|r| r.0 == kind).count(), 256);
    }
}

#[test]
fn domain_svg_has_flat_gamma1() {
    let out = trifold(&["domain", "--T", "5", "--format", "svg"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(r#"width="800" height="800""#));
    for kind in ["Gamma1", "Gamma2Plus", "Gamma2Minus", "Gamma3Plus", "Gamma3Minus"] {
        assert_eq!(svg.matches(&format!(r#"<path id="{kind}""#)).count(), 1, "{kind}");
        assert!(svg.contains(&format!(">{kind}</text>")), "legend for {kind}");
    }
    let start = svg.find(r#"<path id="Gamma1" d=""#).unwrap() + r#"<path id="Gamma1" d=""#.len();
    let d = &svg[start..start + svg[start..].find('"').unwrap()];
    let ys: Vec<&str> = d.split_whitespace().map(|p| p[1..].split(',').nth(1).unwrap()).collect();
    assert!(ys.len() > 100);
    assert!(ys.iter().all(|y| *y == ys[0]));

    // same row as the top of Γ3+, which ends at b = 1/11
    let csv = stdout(&trifold(&["domain", "--T", "5", "--samples", "256"]));
    let rows = parse_domain_csv(&csv);
    for r in rows.iter().filter(|r| r.0 == "Gamma1") {
        assert!((r.3 - 1.0 / 11.0).abs() < 1e-12);
    }
}

#[test]
fn nesting_of_domains() {
    // each smaller-T region contains the larger-T region's corner
    let polys: Vec<Vec<Point<f64>>> = [1, 2, 5]
        .iter()
        .map(|t| {
            let csv = stdout(&trifold(&["domain", "--T", &t.to_string(), "--samples", "256"]));
            parse_domain_csv(&csv).iter().map(|r| Point::new(r.2, r.3)).collect()
        })
        .collect();
    let corners: Vec<_> = [1u32, 2, 5].iter().map(|&t| corner_point::<f64>(t).unwrap()).collect();
    assert!(point_in_polygon(&polys[0], Point::new(corners[1].a0, corners[1].b0)));
    assert!(point_in_polygon(&polys[0], Point::new(corners[2].a0, corners[2].b0)));
    assert!(point_in_polygon(&polys[1], Point::new(corners[2].a0, corners[2].b0)));
}

#[test]
fn verify_passes_and_reports_values() {
    let out = trifold(&["verify", "--T", "1"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("max_L2 = 2.27614237492"));

    let out = trifold(&["verify", "--T", "2", "--resolution", "150"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("min_L3 = 0.333333333333"));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn lemmas_write_empty_violation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("violations.csv");
    let out = trifold(&["lemmas", "--k-max", "20", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&path).unwrap().len(), 0);
}

#[test]
fn asymptotics_final_cover_near_one() {
    let out = trifold(&["asymptotics", "--T", "2", "--n-max", "800"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "T,n,ratio_cover,max_mod,normalized_cover,normalized_max");
    let last: Vec<&str> = text.lines().last().unwrap().split(',').collect();
    assert_eq!(last[1], "800");
    let cover: f64 = last[4].parse().unwrap();
    assert!((cover - 1.0).abs() < 0.05);
    assert!(String::from_utf8_lossy(&out.stderr).contains("S^(T)"));
}

#[test]
fn check_univalence_exit_codes() {
    let inside = trifold(&["check-univalence", "--T", "1", "--a", "0.5", "--b", "0.1"]);
    assert_eq!(inside.status.code(), Some(0));
    assert!(stdout(&inside).starts_with("verdict = univalent"));

    let outside = trifold(&["check-univalence", "--T", "1", "--a", "-1.05", "--b", "0.3"]);
    assert_eq!(outside.status.code(), Some(1));
    assert!(stdout(&outside).contains("witness"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(trifold(&["domain", "--T", "0"]).status.code(), Some(2));
    assert_eq!(trifold(&["domain"]).status.code(), Some(2));
    assert_eq!(trifold(&["suffridge", "--T", "1", "--n", "3", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(trifold(&["verify", "--T", "1", "--resolution", "10"]).status.code(), Some(2));
    assert_eq!(trifold(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn io_failure_names_the_path() {
    let out = trifold(&["corner", "--T", "1", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/x.csv"));
}

#[test]
fn out_dash_means_stdout_and_files_match() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corner.csv");
    let to_file = trifold(&["corner", "--T", "3", "--out", path.to_str().unwrap()]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let to_stdout = trifold(&["corner", "--T", "3", "--out", "-"]);
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> Vec<u8> {
    let path = dir.join(name);
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--out", &p]);
    assert!(trifold(&full).status.success());
    std::fs::read(path).unwrap()
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["domain", "--T", "3", "--samples", "256", "--format", "csv"],
        &["domain", "--T", "2", "--format", "svg"],
        &["extremal", "--T", "2", "--resolution", "80"],
        &["asymptotics", "--T", "1", "--n-max", "200"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let first = run_to(dir.path(), &format!("{i}a"), args);
        let second = run_to(dir.path(), &format!("{i}b"), args);
        assert!(!first.is_empty());
        assert_eq!(first, second, "{args:?}");
    }
}
