//! Regenerates the certificate files under data/. All searches are
//! deterministic, so reruns must reproduce the committed files byte for
//! byte.

use std::fs;
use std::time::Instant;

use sierpcolor::graph::Graph;
use sierpcolor::s3;
use sierpcolor::sierpinski::SierpinskiGraph;
use sierpcolor::solver::{
    constrained_certificate_search, find_embedding, CertCondition, ConstrainedStatus,
    EmbeddingStatus, DEFAULT_EXPANSION_BUDGET,
};

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    fs::create_dir_all(&dir).unwrap();

    let t = Instant::now();
    let (a, b) = s3::s3_base_colorings(DEFAULT_EXPANSION_BUDGET).unwrap();
    let m3 = SierpinskiGraph::new(Graph::complete(3), 3).unwrap().materialize().unwrap();
    fs::write(dir.join("s3_type_a_n3.json"), a.coloring.to_json(&m3.graph)).unwrap();
    fs::write(dir.join("s3_type_b_n3.json"), b.coloring.to_json(&m3.graph)).unwrap();
    println!("typed base colorings: {:?}", t.elapsed());

    let cycle_jobs: [(usize, usize, CertCondition, &str); 3] = [
        (4, 3, CertCondition::BipartiteII { a_side: vec![0, 2] }, "c4_n3_condition_ii.json"),
        (5, 4, CertCondition::DistanceI, "c5_n3_condition_i.json"),
        (6, 3, CertCondition::BipartiteII { a_side: vec![0, 2, 4] }, "c6_n3_condition_ii.json"),
    ];
    for (k_cycle, colors, condition, file) in cycle_jobs {
        let t = Instant::now();
        let m = SierpinskiGraph::new(Graph::cycle(k_cycle).unwrap(), 3)
            .unwrap()
            .materialize()
            .unwrap();
        let out =
            constrained_certificate_search(&m, colors, &condition, DEFAULT_EXPANSION_BUDGET)
                .unwrap();
        match out.status {
            ConstrainedStatus::Sat(cert) => {
                fs::write(dir.join(file), cert.to_json(&m.graph)).unwrap();
                println!("{file}: explored {} in {:?}", out.explored, t.elapsed());
            }
            other => panic!("{file}: search failed with {other:?}"),
        }
    }

    let t = Instant::now();
    let p = sierpcolor::reductions::gadget_p();
    let out = find_embedding(&p, &m3.graph, DEFAULT_EXPANSION_BUDGET).unwrap();
    match out.status {
        EmbeddingStatus::Found(map) => {
            let words: Vec<String> = map.iter().map(|&v| m3.graph.label(v)).collect();
            let json = serde_json::json!({
                "pattern": "P",
                "host_base": "K3",
                "host_dim": 3,
                "map": words,
            });
            fs::write(dir.join("p_into_s3_3.json"), serde_json::to_string_pretty(&json).unwrap())
                .unwrap();
            println!("p_into_s3_3.json: explored {} in {:?}", out.explored, t.elapsed());
        }
        other => panic!("embedding failed with {other:?}"),
    }
}
