use antiramsey::format::{parse_coloring, to_json, ColoringFile};
use antiramsey::report::{Counters, RunReport};
use antiramsey_core::construct::{normal_coloring, turan_coloring};
use antiramsey_core::dirac::house;
use antiramsey_core::{ColoredGraph, PartiteSpec};

#[test]
fn round_trip() {
    let cgs = [
        normal_coloring(&PartiteSpec::new([3, 2, 2, 1]).unwrap(), 4).unwrap(),
        turan_coloring(5, 2, 4).unwrap(),
        ColoredGraph::rainbow(house()),
    ];
    for cg in cgs {
        let text = to_json(&cg, Some("x"));
        let back = parse_coloring(&text).unwrap();
        assert_eq!(back, cg);
        assert_eq!(to_json(&back, Some("x")), text);
    }
}

#[test]
fn field_names() {
    let cg = normal_coloring(&PartiteSpec::new([2, 1, 1]).unwrap(), 3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&to_json(&cg, Some("normal"))).unwrap();
    assert_eq!(v["partite_sizes"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["seed_name"], "normal");
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
}

fn error_field(text: &str) -> String {
    parse_coloring(text).unwrap_err().field
}

#[test]
fn validation() {
    assert_eq!(error_field(r#"{"partite_sizes": [2, 0], "edges": []}"#), "partite_sizes[1]");
    assert_eq!(error_field(r#"{"partite_sizes": [1, 1], "edges": [[0, 2, 0]]}"#), "edges[0]");
    assert_eq!(error_field(r#"{"partite_sizes": [2, 1], "edges": [[0, 1, 0], [0, 2, 0], [1, 2, 0]]}"#), "edges[0]");
    assert_eq!(error_field(r#"{"partite_sizes": [1, 1, 1], "edges": [[0, 1, 0], [0, 2, 1]]}"#), "edges");
    assert_eq!(
        error_field(r#"{"partite_sizes": [1, 1, 1], "edges": [[0, 1, 0], [0, 2, 2], [1, 2, 0]]}"#),
        "edges"
    );
    assert_eq!(error_field(r#"{"partite_sizes": [1, 1], "edges": [[0, 1, 0], [1, 0, 0]]}"#), "edges[1]");
    assert_eq!(error_field(r#"{"partite_sizes": [1, 1], "vertex_count": 3, "edges": []}"#), "vertex_count");
    assert_eq!(error_field(r#"{"edges": []}"#), "partite_sizes");
    assert!(error_field("{\n  \"edges\": [\n  oops").starts_with("line 3"));
    assert!(error_field(r#"{"edges": [], "vertex_count": 1, "colour": 1}"#).starts_with("line"));
}

#[test]
fn plain_graphs() {
    let f: ColoringFile = serde_json::from_str(r#"{"vertex_count": 4, "edges": [[0, 1, 0], [2, 3, 1]]}"#).unwrap();
    let cg = f.to_colored().unwrap();
    assert_eq!(cg.color_count(), 2);
    assert!(cg.graph().part_sizes().is_none());
}

#[test]
fn report_fields_survive() {
    let mut rep = RunReport {
        command: vec!["ar".into(), "--k".into(), "3".into()],
        elapsed_secs: 0.1 + 0.2,
        counters: Some(Counters {
            nodes: u64::MAX,
            bound_prunes: 1,
            rainbow_prunes: 2,
            leaves: 3,
            tasks: 4,
        }),
        pass: Some(true),
        ..RunReport::default()
    };
    rep.value("value", 1 << 60).label("method", "oracle").input("k", 3);
    let back = RunReport::from_json(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
    assert_eq!(back.elapsed_secs.to_bits(), rep.elapsed_secs.to_bits());
}
