//! Writes sample input files for the `prokit` command line into a directory
//! (default `fixtures`).

use std::fs;
use std::path::PathBuf;

use prokit::automata::{bossut, WordAutomaton};
use prokit::circuit::{ChipDecl, Signature};
use prokit::quantum_gates as qg;
use prokit::semiring::Natural;
use prokit::temperley_lieb as tl;
use serde_json::{json, Value};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    fs::create_dir_all(&dir)?;
    let n = |x: u64| Natural::from(x);
    let ab = WordAutomaton::from_rows(
        vec![n(1), n(0)],
        vec![("a", vec![vec![n(0), n(1)], vec![n(0), n(0)]]), ("b", vec![vec![n(0), n(0)], vec![n(1), n(0)]])],
        vec![n(1), n(0)],
    )?;
    let sig = Signature::new([ChipDecl::new("f", 1, 1), ChipDecl::new("m", 1, 2)])?;
    let (_, near) = bossut::near_walls().swap_remove(0);
    let files: Vec<(&str, Value)> = vec![
        ("tl_rep.json", tl::standard_rep().to_json()),
        ("snake.json", tl::snake_left().to_json()),
        ("loop.json", tl::loop_term().to_json()),
        ("quantum_rep.json", qg::gate_rep().to_json()),
        ("cnot.json", qg::cnot_network().to_json()),
        ("bossut.json", bossut::automaton().to_json()),
        ("wall.json", bossut::displayed_wall().to_json()),
        ("near_wall.json", near.to_json()),
        ("ab_star.json", ab.to_json()),
        ("signature.json", sig.to_json()),
        ("unknown_chip.json", json!({"chip": "nope"})),
    ];
    for (name, value) in files {
        let path = dir.join(name);
        fs::write(&path, serde_json::to_string_pretty(&value)?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
