//! Byte-level golden tests for the CLI: with every configuration knob
//! pinned by flags and `--no-timing` set, a run is a pure function of argv.

use std::process::Command;

fn run(args: &[&str], env: &[(&str, &str)]) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_primlab"));
    cmd.args(args)
        .env_remove("PRIMLAB_THREADS")
        .env_remove("PRIMLAB_SEGMENT_BITS")
        .env_remove("PRIMLAB_ENUM_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let output = cmd.output().expect("binary runs");
    (
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
        output.status.code().unwrap(),
    )
}

const PIN: [&str; 8] = [
    "--no-timing",
    "--threads",
    "2",
    "--segment-bits",
    "20",
    "--enum-cap",
    "9",
    "--format",
];

fn pinned(args: &[&str], format: &str) -> Vec<String> {
    let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    v.extend(PIN.iter().map(|s| s.to_string()));
    v.push(format.to_string());
    v
}

fn run_pinned(args: &[&str], format: &str) -> (String, i32) {
    let argv = pinned(args, format);
    let refs: Vec<&str> = argv.iter().map(String::as_str).collect();
    let (stdout, stderr, code) = run(&refs, &[]);
    assert!(stderr.is_empty(), "stderr: {stderr}");
    (stdout, code)
}

#[test]
fn count_tot_csv_full_bytes() {
    let (stdout, code) = run_pinned(
        &["count", "--class", "tot", "--from", "3", "--to", "4"],
        "csv",
    );
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "# command: count class=tot from=3 to=4\n\
         # config: format=csv segment_entries=1048576 threads=2 enum_cap=9 timing=false\n\
         n,primorial,tot,pi,ratio\n\
         3,30,8,11,0.727273\n\
         4,210,48,47,1.02128\n"
    );
}

#[test]
fn count_twin_markdown_full_bytes() {
    let (stdout, code) = run_pinned(
        &["count", "--class", "twin", "--from", "3", "--to", "5"],
        "markdown",
    );
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "<!-- command: count class=twin from=3 to=5 -->\n\
         <!-- config: format=markdown segment_entries=1048576 threads=2 enum_cap=9 timing=false -->\n\
         | n | primorial | twin | twin_star | ratio |\n\
         | --- | --- | --- | --- | --- |\n\
         | 3 | 30 | 3 | 5 | 0.6 |\n\
         | 4 | 210 | 15 | 15 | 1 |\n\
         | 5 | 2310 | 135 | 70 | 1.92857 |\n"
    );
}

#[test]
fn primorial_plain_full_bytes() {
    let (stdout, code) = run_pinned(&["primorial", "5"], "plain");
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "# command: primorial n=5\n\
         # config: format=plain segment_entries=1048576 threads=2 enum_cap=9 timing=false\n\
         n primorial\n\
         5 2310\n"
    );
}

#[test]
fn table_3_reproduces_color_grid() {
    // Roles of the 3-primorial table, row-major: white cells are the
    // 3-totatives, blue the multiples of 5 untouched by 2 or 3, yellow the
    // joint multiples, red the rest.
    let (stdout, code) = run_pinned(&["table", "3"], "csv");
    assert_eq!(code, 0);
    let roles: Vec<(u64, &str)> = stdout
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("row,"))
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[2].parse().unwrap(), f[3])
        })
        .collect();
    let expected: Vec<(u64, &str)> = [
        (2, "r"),
        (3, "r"),
        (4, "r"),
        (5, "b"),
        (6, "r"),
        (7, "w"),
        (8, "r"),
        (9, "r"),
        (10, "y"),
        (11, "w"),
        (12, "r"),
        (13, "w"),
        (14, "r"),
        (15, "y"),
        (16, "r"),
        (17, "w"),
        (18, "r"),
        (19, "w"),
        (20, "y"),
        (21, "r"),
        (22, "r"),
        (23, "w"),
        (24, "r"),
        (25, "b"),
        (26, "r"),
        (27, "r"),
        (28, "r"),
        (29, "w"),
        (30, "y"),
        (31, "w"),
    ]
    .iter()
    .map(|&(v, c)| {
        let role = match c {
            "w" => "totative",
            "b" => "multiple_pn",
            "r" => "multiple_smaller",
            "y" => "multiple_both",
            _ => unreachable!(),
        };
        (v, role)
    })
    .collect();
    assert_eq!(roles, expected);
}

#[test]
fn table_4_totative_columns_match_expected_variant() {
    let (stdout, code) = run_pinned(&["table", "4", "--totative-columns"], "csv");
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = stdout
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("row,"))
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 7 * 8);
    // First row: 7 blue, then totatives 11..31.
    assert_eq!(rows[0], ["0", "7", "7", "multiple_pn"]);
    assert_eq!(rows[1], ["0", "11", "11", "totative"]);
    assert_eq!(rows[7], ["0", "31", "31", "totative"]);
    // The blue cells walk a diagonal, one per column.
    let blues: Vec<&str> = rows
        .iter()
        .filter(|r| r[3] == "multiple_pn")
        .map(|r| r[2])
        .collect();
    assert_eq!(blues, ["7", "49", "77", "91", "119", "133", "161", "203"]);
}

#[test]
fn totatives_list_golden() {
    let (stdout, code) = run_pinned(&["totatives", "2"], "csv");
    assert_eq!(code, 0);
    let members: Vec<&str> = stdout
        .lines()
        .filter(|l| !l.starts_with('#') && *l != "t")
        .collect();
    assert_eq!(members, ["5", "7"]);
}

#[test]
fn tuple_checks_golden() {
    let (stdout, code) = run_pinned(
        &["tuple", "--offsets", "0,2,4", "--check", "admissible"],
        "csv",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("admissible,-,3,4,2,false"), "{stdout}");

    let (stdout, code) = run_pinned(
        &[
            "tuple",
            "--offsets",
            "0,6,12,18",
            "--check",
            "strong",
            "--n",
            "5",
        ],
        "csv",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("strong,5,4,18,6,true"), "{stdout}");
}

#[test]
fn goldbach_classic_report_golden() {
    let (stdout, code) = run_pinned(
        &[
            "goldbach",
            "--flavor",
            "classic",
            "--from",
            "4",
            "--to",
            "100",
            "--emit-witnesses",
        ],
        "csv",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("classic,4,2,2\n"), "{stdout}");
    assert!(stdout.contains("classic,30,7,23\n"), "{stdout}");
    assert!(stdout.contains("classic,100,3,97\n"), "{stdout}");
    assert!(stdout.contains("# range: lo=4 hi=100 evens_scanned=49\n"));
    assert!(stdout.contains("# exceptions: 0\n"));
    assert!(stdout.contains("# status: verified\n"));
}

#[test]
fn goldbach_twin_lists_small_m_exception() {
    let (stdout, code) = run_pinned(
        &["goldbach", "--flavor", "twin", "--from", "4", "--to", "200"],
        "csv",
    );
    assert_eq!(
        code, 0,
        "known small-m misses stay below the documented start"
    );
    assert!(stdout.contains("# exceptions: 1\n"));
    assert!(stdout.contains("# exception: 4\n"));
    assert!(stdout.contains("# threshold: 6\n"));
    assert!(stdout.contains("# witnesses: suppressed\n"));
}

#[test]
fn identical_argv_identical_bytes() {
    let args = [
        "goldbach",
        "--flavor",
        "sexy",
        "--from",
        "4",
        "--to",
        "4000",
        "--emit-witnesses",
    ];
    let (first, _) = run_pinned(&args, "csv");
    let (second, _) = run_pinned(&args, "csv");
    assert_eq!(first, second);
}

#[test]
fn env_configures_and_flags_override() {
    let (stdout, _, code) = run(
        &["primorial", "3", "--no-timing"],
        &[("PRIMLAB_THREADS", "3"), ("PRIMLAB_SEGMENT_BITS", "12")],
    );
    assert_eq!(code, 0);
    assert!(
        stdout.contains("segment_entries=4096 threads=3"),
        "env not honored: {stdout}"
    );

    let (stdout, _, code) = run(
        &["primorial", "3", "--no-timing", "--threads", "5"],
        &[("PRIMLAB_THREADS", "3")],
    );
    assert_eq!(code, 0);
    assert!(
        stdout.contains("threads=5"),
        "flag must beat environment: {stdout}"
    );

    let (_, stderr, code) = run(&["primorial", "3"], &[("PRIMLAB_THREADS", "zero")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("PRIMLAB_THREADS"), "{stderr}");
}

#[test]
fn usage_errors_print_synopsis_and_exit_2() {
    let (_, stderr, code) = run(&["totatives", "12"], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("resource"), "{stderr}");
    assert!(stderr.contains("--help"), "{stderr}");

    let (_, stderr, code) = run(&["goldbach", "--flavor", "twin"], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--to"), "{stderr}");

    let (_, _, code) = run(
        &["count", "--class", "tot", "--from", "2", "--to", "3"],
        &[],
    );
    assert_eq!(code, 2);

    let (_, _, code) = run(
        &["goldbach", "--flavor", "classic", "--n", "2", "--to", "100"],
        &[],
    );
    assert_eq!(code, 2);
}

#[test]
fn quad_and_triple_emit_recurrence_tables() {
    let (stdout, code) = run_pinned(
        &["count", "--class", "quad", "--from", "3", "--to", "5"],
        "csv",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("n,primorial,quad\n"), "{stdout}");
    assert!(stdout.contains("3,30,1\n"));
    assert!(stdout.contains("4,210,6\n"));
    assert!(stdout.contains("5,2310,42\n"));

    let (stdout, code) = run_pinned(
        &["count", "--class", "triple", "--from", "3", "--to", "4"],
        "csv",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("n,primorial,triple\n"), "{stdout}");
    assert!(stdout.contains("3,30,3\n"));
    assert!(stdout.contains("4,210,16\n"));
}
