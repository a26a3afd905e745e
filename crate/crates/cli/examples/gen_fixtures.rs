//! Regenerate the fixture files from the programmatic catalogue:
//! `cargo run -p twind-cli --example gen_fixtures`

use std::fs;
use std::path::Path;

use twind_cli::formats::AlgebraFile;
use twind_core::fixtures;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(&dir).unwrap();
    let mut all = vec![("kac_printed", fixtures::kac_printed())];
    all.extend(fixtures::catalogue());
    for (name, g) in all {
        let doc = AlgebraFile::from_algebra(&g);
        let path = dir.join(format!("{name}.json"));
        fs::write(&path, doc.to_json()).unwrap();
        println!("wrote {}", path.display());
    }
}
