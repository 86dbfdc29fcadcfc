use std::path::PathBuf;
use std::process::Command;

use perigraph::format::{parse_assignment, parse_finite, parse_periodic};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("perigraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (String, i32) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_perigraph"));
    cmd.args(args).env_remove("PERIGRAPH_STATE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn chromatic_path() {
    let (out, code) = run(&["chromatic", &data("path.pgf")]);
    assert_eq!(code, 0);
    assert_eq!(out, "colors 2\nperiod 2\nvcolor 0 0 0\nvcolor 0 1 1\n");
}

#[test]
fn infeasible_coloring_exits_2() {
    for method in ["transfer", "pigeonhole"] {
        let (out, code) = run(&["color", &data("tristrip.pgf"), "-k", "2", "--method", method]);
        assert_eq!((out.as_str(), code), ("verdict infeasible\n", 2));
    }
}

#[test]
fn methods_agree_on_bundled_inputs() {
    for file in ["path.pgf", "ladder.pgf", "tristrip.pgf", "four_regular.pgf", "triangles.pgf"] {
        for k in 1..=4 {
            let k = k.to_string();
            let (a, ca) = run(&["color", &data(file), "-k", &k, "--method", "transfer"]);
            let (b, cb) = run(&["color", &data(file), "-k", &k, "--method", "pigeonhole"]);
            assert_eq!(ca, cb, "{file} k={k}");
            assert_eq!(a.lines().next(), b.lines().next(), "{file} k={k}");
        }
    }
}

#[test]
fn emitted_assignments_reparse() {
    let pg = parse_periodic(&std::fs::read_to_string(data("ladder.pgf")).unwrap()).unwrap();
    for args in [
        vec!["chromatic"],
        vec!["orient"],
        vec!["edgecolor"],
        vec!["matching"],
        vec!["factor", "-k", "2"],
        vec!["bipartite"],
    ] {
        let mut full = args.clone();
        let path = data("ladder.pgf");
        full.insert(1, &path);
        let (out, code) = run(&full);
        assert_eq!(code, 0, "{args:?}");
        let a = parse_assignment(&out, &pg).unwrap();
        assert!(a.period() >= 1);
    }
    let (out, _) = run(&["edgecolor", &data("ladder.pgf")]);
    assert!(out.starts_with("colors 3\n"));
}

#[test]
fn window_reparses_as_a_window() {
    let (out, code) = run(&["window", &data("tristrip.pgf"), "-a", "-2", "-n", "3"]);
    assert_eq!(code, 0);
    let g = parse_finite(&out).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 3 + 2 * 3));
    assert_eq!(g.vertex_label(0), Some("0@-2"));
    let (dot, _) = run(&["window", &data("path.pgf"), "-a", "0", "-n", "2", "--dot"]);
    assert!(dot.contains("\"0@0\" -- \"0@1\""));
}

#[test]
fn matchings_and_factors() {
    let (out, code) = run(&["matching", &data("path.pgf")]);
    assert_eq!(code, 0);
    assert!(out.contains("period 2"));
    assert_eq!(run(&["matching", &data("triangles.pgf")]).1, 2);
    assert_eq!(run(&["factor", &data("four_regular.pgf"), "-k", "2"]).1, 0);
    assert_eq!(run(&["factor", &data("path.pgf"), "-k", "3"]).1, 2);
}

#[test]
fn reduce_colors() {
    let (out, code) = run(&["reduce", &data("path.pgf"), &data("path4.asg")]);
    assert_eq!(code, 0);
    assert!(out.ends_with("colors 3\nperiod 4\nvcolor 0 0 0\nvcolor 0 1 1\nvcolor 0 2 2\nvcolor 0 3 1\n"));
    let (out, _) = run(&["reduce", &data("path.pgf"), &data("path4.asg"), "--two"]);
    assert!(out.ends_with("vcolor 0 0 1\nvcolor 0 1 2\nvcolor 0 2 2\nvcolor 0 3 2\n"));
    let improper = scratch("improper.asg", "period 1\nvcolor 0 0 0\n");
    assert_eq!(run(&["reduce", &data("path.pgf"), &improper]).1, 1);
}

#[test]
fn bipartite_verdicts() {
    assert_eq!(run(&["bipartite", &data("ladder.pgf")]).1, 0);
    assert_eq!(run(&["bipartite", &data("tristrip.pgf")]).1, 2);
}

#[test]
fn sft_points() {
    let (out, code) = run(&["sft", &data("golden.sft")]);
    assert_eq!((out.as_str(), code), ("verdict feasible\nperiod 2\nword 01\n", 0));
    assert_eq!(run(&["sft", &data("full.sft")]), ("verdict infeasible\n".into(), 2));
}

#[test]
fn generators_emit_parseable_graphs() {
    let (out, code) = run(&["gen", "fig1", "-r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(parse_finite(&out).unwrap().vertex_count(), 21);
    assert_eq!(parse_finite(&run(&["gen", "fig2"]).0).unwrap().vertex_count(), 13);
    assert_eq!(parse_finite(&run(&["gen", "fig3"]).0).unwrap().vertex_count(), 40);
    let (ball, _) = run(&["gen", "tree-ball", "-r", "2"]);
    assert!(ball.starts_with("digraph 10\n"));
    let (cay, _) = run(&["gen", "cayley", "-n", "3", "-g", "1", "--attach"]);
    assert_eq!(parse_finite(&cay).unwrap().vertex_count(), 12);
    let (dot, _) = run(&["gen", "gadget", "--dot"]);
    assert!(dot.contains("label=\"in1\""));
    let gadget = scratch("gadget.fg", &run(&["gen", "gadget"]).0);
    let (fig3, code) = run(&["gen", "fig3", "--gadget", &gadget]);
    assert_eq!((fig3, code), run(&["gen", "fig3"]));
}

#[test]
fn verifiers() {
    let gadget = scratch("g.fg", &run(&["gen", "gadget"]).0);
    assert_eq!(run(&["verify", "forced", &gadget, "-a", "0", "-b", "4", "-k", "3"]), ("FORCED\n".into(), 0));
    let (out, code) = run(&["verify", "forced", &data("p3.fg"), "-a", "0", "-b", "2", "-k", "3"]);
    assert_eq!(code, 3);
    assert!(out.starts_with("WITNESS\ncoloring 3\n"));
    let (out, code) = run(&["verify", "inversion", &data("k2.fg"), "--perms", &data("swap.perm")]);
    assert_eq!((out.as_str(), code), ("INVERSION 0 1\nperm 1 0\n", 0));
    let (out, code) = run(&["verify", "orient-group", &data("c4.fg"), "--perms", &data("c4rot.perm")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ORIENTED\n"));
    assert_eq!(run(&["verify", "orient-group", &data("k2.fg")]).1, 3);
    assert_eq!(run(&["verify", "inversion", &data("c4.fg"), "--perms", &data("c4rot.perm")]).1, 3);
    let (out, _) = run(&["verify", "orbits", &data("c4.fg"), &data("c4alt.col")]);
    assert_eq!(out, "orbits 2\n");
}

#[test]
fn errors_and_caps() {
    assert_eq!(run(&["chromatic", "/nonexistent.pgf"]).1, 1);
    assert_eq!(run(&["nonsense"]).1, 1);
    let bad = scratch("bad.pgf", "periodic 1\ne 0 0 0\n");
    assert_eq!(run(&["chromatic", &bad]).1, 1);
    let capped = run_env(&["color", &data("tristrip.pgf"), "-k", "3"], &[("PERIGRAPH_STATE_CAP", "2")]);
    assert_eq!(capped.1, 4);
    assert_eq!(run(&["--help"]).1, 0);
}

#[test]
fn output_is_deterministic() {
    for args in [vec!["chromatic", "tristrip.pgf"], vec!["edgecolor", "four_regular.pgf"]] {
        let path = data(args[1]);
        let first = run(&[args[0], &path]);
        assert_eq!(first, run(&[args[0], &path]));
    }
}
