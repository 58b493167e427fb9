use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use embedgraph::{load_word_vectors, WordVectorFormat};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    path.to_str().unwrap().to_owned()
}

fn run_with(args: &[&str], stdin: Option<&str>, envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_embedgraph"));
    cmd.args(args)
        .env_remove("EMBEDGRAPH_MODEL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Output {
    run_with(args, None, &[])
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
    assert_eq!(run(&["distance", "--help"]).code, 0);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&[]).code, 64);
    assert_eq!(run(&["frobnicate"]).code, 64);
    assert_eq!(run(&["threshold", "--graph", "x.json"]).code, 64);
    assert_eq!(
        run(&[
            "translate",
            "--graph",
            "x.json",
            "--target",
            "a",
            "--target-file",
            "b"
        ])
        .code,
        64
    );
    assert_eq!(
        run(&["convert", "--graph", "x.json", "--kind", "sparse"]).code,
        64
    );
}

#[test]
fn trust_route_distances() {
    let graph = fixture("trust_routes.json");
    let target = fixture("trust_target.json");
    let out = run(&[
        "distance",
        "--graph",
        &graph,
        "--from",
        "d",
        "--to",
        "a",
        "--target-file",
        &target,
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "1.3500\nd -> b -> a\n");

    let out = run(&[
        "distance",
        "--graph",
        &graph,
        "--route",
        "d,c,a",
        "--target-file",
        &target,
    ]);
    assert_eq!(out.stdout, "1.5800\nd -> c -> a\n");

    let out = run(&[
        "distance",
        "--graph",
        &graph,
        "--from",
        "a",
        "--to",
        "d",
        "--target-file",
        &target,
        "--direction",
        "undirected",
    ]);
    assert_eq!(out.stdout, "1.3500\na -> b -> d\n");

    let out = run(&[
        "--symmetrize",
        "distance",
        "--graph",
        &graph,
        "--from",
        "a",
        "--to",
        "d",
        "--target-file",
        &target,
    ]);
    assert_eq!(out.stdout, "1.3500\na -> b -> d\n");
}

#[test]
fn missing_path_exits_3_and_names_both_ends() {
    let out = run(&[
        "distance",
        "--graph",
        &fixture("trust_routes.json"),
        "--from",
        "a",
        "--to",
        "d",
        "--target-file",
        &fixture("trust_target.json"),
    ]);
    assert_eq!(out.code, 3);
    assert!(
        out.stderr.contains("`a`") && out.stderr.contains("`d`"),
        "{}",
        out.stderr
    );

    let out = run(&[
        "distance",
        "--graph",
        &fixture("trust_routes.json"),
        "--route",
        "a,b",
        "--target-file",
        &fixture("trust_target.json"),
    ]);
    assert_eq!(out.code, 3);
}

#[test]
fn threshold_family_network() {
    let out = run(&[
        "threshold",
        "--graph",
        &fixture("family_family.json"),
        "--cutoff",
        "0.5",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = run_with(
        &["export", "--graph", "-", "--format", "tsv"],
        Some(&out.stdout),
        &[],
    );
    let kept: Vec<&str> = out
        .stdout
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap())
        .collect();
    assert_eq!(
        kept,
        ["daughter", "father", "husband", "mother", "son", "wife"]
    );
}

#[test]
fn translate_then_threshold_equals_one_step() {
    let graph = fixture("trust_routes.json");
    let target = fixture("trust_target.json");
    let weighted = run(&["translate", "--graph", &graph, "--target-file", &target]);
    assert_eq!(weighted.code, 0, "{}", weighted.stderr);
    let two_step = run_with(
        &["threshold", "--graph", "-", "--cutoff", "0.2"],
        Some(&weighted.stdout),
        &[],
    );
    let one_step = run(&[
        "translate",
        "--graph",
        &graph,
        "--target-file",
        &target,
        "--cutoff",
        "0.2",
    ]);
    assert_eq!(two_step.stdout, one_step.stdout);
    let stats = run_with(&["stats", "--graph", "-"], Some(&one_step.stdout), &[]);
    // Weights are 1 - distance: 0.23, 0.24, 0.42 pass, envy's 0.18 does not.
    assert_eq!(stats.stdout, "kind\tedge\nvertices\t4\nedges\t3\n");
}

#[test]
fn embed_resolves_tokens_through_the_model() {
    let model = fixture("trust_model.txt");
    let out = run(&[
        "--model",
        &model,
        "embed",
        "--tokens",
        &fixture("trust_tokens.json"),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let dist = run_with(
        &[
            "--model", &model, "distance", "--graph", "-", "--from", "d", "--to", "a", "--target",
            "trust",
        ],
        Some(&out.stdout),
        &[],
    );
    assert_eq!(dist.stdout, "1.3500\nd -> b -> a\n");

    let via_env = run_with(
        &["embed", "--tokens", &fixture("trust_tokens.json")],
        None,
        &[("EMBEDGRAPH_MODEL", &model)],
    );
    assert_eq!(via_env.stdout, out.stdout);
}

#[test]
fn binary_models_are_detected_by_extension() {
    let text = std::fs::read(fixture("trust_model.txt")).unwrap();
    let store = load_word_vectors(&text[..], WordVectorFormat::Text)
        .unwrap()
        .store;
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("model.bin");
    store
        .write_binary(std::fs::File::create(&bin).unwrap())
        .unwrap();
    let bin = bin.to_str().unwrap();

    let from_text = run(&[
        "--model",
        &fixture("trust_model.txt"),
        "embed",
        "--tokens",
        &fixture("trust_tokens.json"),
    ]);
    let from_bin = run(&[
        "--model",
        bin,
        "embed",
        "--tokens",
        &fixture("trust_tokens.json"),
    ]);
    assert_eq!(from_bin.code, 0, "{}", from_bin.stderr);
    assert_eq!(from_bin.stdout, from_text.stdout);

    let forced_text = run(&[
        "--model",
        bin,
        "--model-format",
        "text",
        "embed",
        "--tokens",
        &fixture("trust_tokens.json"),
    ]);
    assert_eq!(forced_text.code, 1);
}

#[test]
fn unknown_token_exits_2() {
    let out = run(&[
        "--model",
        &fixture("trust_model.txt"),
        "embed",
        "--tokens",
        &fixture("family_tokens.json"),
    ]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("mother"), "{}", out.stderr);

    let out = run(&[
        "--model",
        &fixture("trust_model.txt"),
        "translate",
        "--graph",
        &fixture("trust_routes.json"),
        "--target",
        "loyalty",
    ]);
    assert_eq!(out.code, 2);
}

#[test]
fn missing_model_is_a_usage_error() {
    let out = run(&["embed", "--tokens", &fixture("trust_tokens.json")]);
    assert_eq!(out.code, 64);
}

#[test]
fn io_and_schema_errors_exit_1() {
    assert_eq!(
        run(&["stats", "--graph", "/nonexistent/graph.json"]).code,
        1
    );
    let bad = run_with(
        &["stats", "--graph", "-"],
        Some("{\"vertices\": [\"a\"], \"colour\": 1}"),
        &[],
    );
    assert_eq!(bad.code, 1);
    let wrong_kind = run(&[
        "threshold",
        "--graph",
        &fixture("trust_routes.json"),
        "--cutoff",
        "0",
    ]);
    assert_eq!(wrong_kind.code, 1);
}

#[test]
fn similarity_reports_mean_cosine_and_correspondence() {
    let graph = fixture("trust_routes.json");
    let out = run(&["similarity", &graph, &graph]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "1.00\nmatched 4, only in first 0, only in second 0\n"
    );

    let other = r#"{"dim": 2, "vertices": ["x", "y"], "edges": [{"source": "x", "target": "y", "vector": [1, 0]}]}"#;
    let out = run_with(&["similarity", &graph, "-"], Some(other), &[]);
    assert_eq!(out.code, 4);
    assert_eq!(run(&["similarity", "-", "-"]).code, 64);
}

#[test]
fn convert_round_trips_and_respects_dense_cap() {
    let graph = fixture("trust_routes.json");
    let original = run(&["export", "--graph", &graph]).stdout;
    for kind in ["adjacency", "edge-list", "vle"] {
        let converted = run(&["convert", "--graph", &graph, "--kind", kind]);
        assert_eq!(converted.code, 0, "{kind}: {}", converted.stderr);
        let back = run_with(&["export", "--graph", "-"], Some(&converted.stdout), &[]);
        assert_eq!(back.stdout, original, "{kind}");
    }
    let capped = run(&[
        "convert",
        "--graph",
        &graph,
        "--kind",
        "adjacency",
        "--max-dense",
        "3",
    ]);
    assert_eq!(capped.code, 1);
    assert!(capped.stderr.contains("cap"), "{}", capped.stderr);
}

#[test]
fn dot_export_with_labels() {
    let weights = run(&[
        "export",
        "--graph",
        &fixture("family_digital.json"),
        "--format",
        "dot",
        "--labels",
        "weight",
    ]);
    assert!(
        weights
            .stdout
            .contains("\"me\" -> \"computer\" [label=\"0.37\"];"),
        "{}",
        weights.stdout
    );

    let tokens = run(&[
        "export",
        "--graph",
        &fixture("trust_routes.json"),
        "--format",
        "dot",
        "--labels",
        "token",
        "--tokens",
        &fixture("trust_tokens.json"),
    ]);
    assert_eq!(tokens.code, 0, "{}", tokens.stderr);
    assert!(
        tokens.stdout.contains("\"d\" -> \"b\" [label=\"rely\"];"),
        "{}",
        tokens.stdout
    );

    let out = run(&[
        "export",
        "--graph",
        &fixture("trust_routes.json"),
        "--format",
        "dot",
        "--labels",
        "token",
    ]);
    assert_eq!(out.code, 64);
}

#[test]
fn writes_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kept.json");
    let out = run(&[
        "threshold",
        "--graph",
        &fixture("family_friend.json"),
        "--cutoff",
        "0.6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let stats = run(&["stats", "--graph", path.to_str().unwrap()]);
    assert_eq!(stats.stdout, "kind\tedge\nvertices\t14\nedges\t2\n");
}
