//! Regenerates the MPJSON corpora under `fixtures/` from the programmatic
//! fixtures. Run from anywhere in the workspace:
//!
//! ```text
//! cargo run -p micropub --example gen_fixtures
//! ```

use std::path::PathBuf;

use micropub::fixtures;
use micropub::serialization::{emit_canonical, Document};

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    std::fs::create_dir_all(&dir).expect("create fixtures directory");

    let mut files: Vec<(String, Document)> = Vec::new();
    for id in fixtures::ALL_FIXTURE_IDS {
        let corpus = fixtures::corpus_of(&[id]);
        files.push((format!("{}.mpjson", id.to_lowercase()), Document::from_corpus(&corpus)));
    }
    files.push((
        "claim_network.mpjson".into(),
        Document::from_corpus(&fixtures::claim_network_corpus()),
    ));
    files.push((
        "similarity_group.mpjson".into(),
        Document::from_corpus(&fixtures::corpus_of(&[
            "MP3", "MP4", "MP5", "MP6", "MP7", "MP13", "MP14", "MP15",
        ])),
    ));
    files.push(("greenberg.mpjson".into(), Document::from_corpus(&fixtures::greenberg_corpus())));

    for (name, doc) in files {
        let path = dir.join(&name);
        let text = emit_canonical(&doc).expect("fixtures are valid");
        std::fs::write(&path, text).expect("write fixture");
        println!("wrote {}", path.display());
    }
}
