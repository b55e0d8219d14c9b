use degpoly::blossom::{Blossom, BlossomKind};
use degpoly::decisive::CATALOG_SEQUENCES;
use degpoly::formats::parse_graph6;
use degpoly::graphic::graphic_sequences;
use degpoly::structure::Decomposition;
use degpoly::LabeledGraph;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["degpoly"];
    full.extend_from_slice(args);
    let code = degpoly_cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn graphic_command() {
    let (code, v) = run_json(&["graphic", "1,1,1,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["graphic"], true);
    let (code, v) = run_json(&["graphic", "3,3,1,1"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["graphic"], false);
}

#[test]
fn polytope_census() {
    let (code, v) = run_json(&["polytope-vertices", "1,1,1,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["total"], 25);
    assert_eq!(v["results"]["fractional"], 10);
    let (_, v) = run_json(&["polytope-vertices", "1,1,1,1,1,1", "--list"]);
    assert_eq!(v["results"]["vertices"].as_array().unwrap().len(), 25);
}

#[test]
fn decisive_all_methods_agree() {
    let (code, v) = run_json(&["decisive", "4,3,2,2,1", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["decisive"], true);
    assert_eq!(v["results"]["agree"], true);
    assert_eq!(v["results"]["verdicts"].as_array().unwrap().len(), 4);
    let (code, _) = run_json(&["decisive", "1,1,1,1,1,1"]);
    assert_eq!(code, 1);
}

#[test]
fn errors_exit_with_two_and_name_the_token() {
    let (code, out, err) = run(&["graphic", "1,y,1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("`y`"), "{err}");
    assert_eq!(run(&["realize", "3,3,1,1"]).0, 2);
    assert_eq!(run(&["polytope-vertices", "1,1,1,1,1,1", "--max-n", "5"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["blossom", "--inline", "--format", "g6", "A`"]).0, 2);
    let (code, _, err) = run(&["decompose", "--inline", "3;1 4"]);
    assert_eq!(code, 2);
    assert!(err.contains("`4`"), "{err}");
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn vertex_check_verdicts() {
    let halves = "1 2 1/2;2 3 1/2;1 3 1/2;4 5 1/2;5 6 1/2;4 6 1/2";
    let (code, v) = run_json(&["vertex-check", "1,1,1,1,1,1", halves, "--inline"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["structure"], true);
    assert_eq!(v["results"]["rank"], true);

    let c4 = "1 2 1/2;2 3 1/2;3 4 1/2;1 4 1/2;1 3 1;2 4 1";
    let (code, v) = run_json(&["vertex-check", "2,2,2,2", c4, "--inline", "--oracle", "rank"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["vertex"], false);
    assert!(v["results"].get("structure").is_none());

    // outside P(d)
    assert_eq!(run(&["vertex-check", "2,2,2,2", "1 2 1", "--inline"]).0, 2);
}

#[test]
fn graph_inputs() {
    let dir = std::env::temp_dir().join(format!("degpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c6.txt");
    std::fs::write(&path, "6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n").unwrap();
    let (code, v) = run_json(&["blossom", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["found"], true);
    let (_, w) = run_json(&["blossom", "--format", "g6", "--inline", "EhEG"]);
    assert_eq!(v["inputs"]["graph"], w["inputs"]["graph"]);
    std::fs::remove_dir_all(&dir).unwrap();

    let (_, v) = run_json(&["decompose", "--inline", "6;1 2;1 3;1 4;1 5;1 6;2 3;3 4;4 5;5 6;6 2"]);
    assert_eq!(v["results"]["v2"], serde_json::json!([1]));
    assert_eq!(v["results"]["v3"], serde_json::json!([2, 3, 4, 5, 6]));
    assert_eq!(v["results"]["core"]["tag"], "SMALL");

    let (_, v) = run_json(&["blossom", "--inline", "--format", "g6", "EhEG", "--k", "3", "--l", "5"]);
    assert_eq!(v["results"]["found"], false);
}

#[test]
fn dimension_and_survey() {
    let (_, v) = run_json(&["polytope-dim", "2,2,1,1"]);
    assert_eq!(v["results"]["dimension"], 1);
    assert_eq!(v["results"]["forced"][0]["pair"], serde_json::json!([1, 2]));
    assert_eq!(v["results"]["forced"][0]["value"], "1");
    assert_eq!(v["results"]["forced"][1]["value"], "0");
    let (code, v) = run_json(&["survey-majorization", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(v["results"]["pairs"].as_array().unwrap().len() > 1);
}

#[test]
fn enumerate_modes() {
    let (_, v) = run_json(&["enumerate", "1,1,1,1"]);
    assert_eq!(v["results"]["count"], 3);
    let (_, v) = run_json(&["enumerate", "2,2,2,2,2,2", "--mode", "iso-classes"]);
    assert_eq!(v["results"]["count"], 2);
    let (_, v) = run_json(&["realize", "2,3,1,2,4"]);
    assert_eq!(v["inputs"]["sequence"], "4,3,2,2,1");
}

#[test]
fn catalog_round_trips() {
    let (_, v) = run_json(&["catalog"]);
    assert_eq!(v["results"]["graphs"], 70);
    let mut seen = std::collections::BTreeSet::new();
    for group in v["results"]["groups"].as_array().unwrap() {
        for g6 in group["graph6"].as_array().unwrap() {
            let g = parse_graph6(g6.as_str().unwrap()).unwrap();
            assert_eq!(g.degree_sequence().to_string(), group["sequence"].as_str().unwrap());
            assert!(seen.insert(g6.as_str().unwrap().to_string()));
        }
    }
    assert_eq!(seen.len(), 70);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["decisive", "2,2,2,2,2,2", "--method", "all"],
        vec!["polytope-vertices", "2,2,2,1,1,1,1", "--list"],
        vec!["enumerate", "3,3,2,2,2", "--mode", "iso-classes"],
    ] {
        let first = run(&args);
        let mut threaded = args.clone();
        threaded.extend(["--jobs", "4"]);
        assert_eq!(first, run(&args));
        assert_eq!(first, run(&threaded));
    }
    let (_, v) = run_json(&["graphic", "1,1", "--timing"]);
    assert!(v["timing_ms"].is_number());
}

fn witness_graph(w: &Value) -> LabeledGraph {
    let g = parse_graph6(w["realization"]["graph6"].as_str().unwrap()).unwrap();
    let edges: Vec<(usize, usize)> = w["realization"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap() as usize - 1, e[1].as_u64().unwrap() as usize - 1))
        .collect();
    assert_eq!(g, LabeledGraph::from_edges(g.order(), edges).unwrap());
    g
}

fn zero_based(v: &Value) -> Vec<usize> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize - 1).collect()
}

#[test]
fn negative_witnesses_revalidate() {
    let mut negatives = 0;
    for n in 6..=7 {
        for d in graphic_sequences(n) {
            let (code, v) = run_json(&["decisive", &d.to_string(), "--method", "all"]);
            if code == 0 {
                continue;
            }
            assert_eq!(code, 1);
            negatives += 1;
            for verdict in v["results"]["verdicts"].as_array().unwrap() {
                assert_eq!(verdict["decisive"], false);
                let w = &verdict["witness"];
                match w["type"].as_str().unwrap() {
                    "eg" => assert_eq!(w["condition"], "failed"),
                    "blossom" => {
                        let g = witness_graph(w);
                        assert_eq!(g.degree_sequence(), d);
                        let b = &w["blossom"];
                        let blossom = Blossom::new(
                            zero_based(&b["v_tour"]),
                            zero_based(&b["w_tour"]),
                            b["polarity"].as_u64().unwrap() as u8,
                            BlossomKind::Integral,
                        )
                        .unwrap();
                        assert!(blossom.holds_in_graph(&g));
                    }
                    "b_member" => {
                        let g = witness_graph(w);
                        assert_eq!(g.degree_sequence(), d);
                        let h = g.induced_subgraph(&zero_based(&w["vertices"])).unwrap();
                        let deg = h.degree_sequence();
                        assert!(CATALOG_SEQUENCES.iter().any(|s| s[..] == *deg.terms()));
                    }
                    "structure" => {
                        let g = witness_graph(w);
                        assert_eq!(g.degree_sequence(), d);
                        let dec = Decomposition {
                            v1: zero_based(&w["v1"]),
                            v2: zero_based(&w["v2"]),
                            v3: zero_based(&w["v3"]),
                            certified: false,
                        };
                        assert!(dec.is_valid_for(&g));
                        assert_eq!(w["core"]["tag"], "NONE");
                    }
                    other => panic!("unexpected witness type {other}"),
                }
            }
        }
    }
    assert!(negatives > 0);
}
