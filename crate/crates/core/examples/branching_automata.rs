//! Branching automata: forks and joins as symmetric chips, runs as circuits.

use prokit::automata::branching::accepted_parallel_words;
use prokit::automata::BranchingAutomaton;

fn main() -> prokit::Result<()> {
    let a = BranchingAutomaton::balanced_example();
    let (sig, _) = a.branching_rep()?;
    println!("chips: {}", sig.chips().map(|c| format!("{}({},{})", c.name, c.out, c.inp)).collect::<Vec<_>>().join(" "));
    for len in 1..=4 {
        let words = accepted_parallel_words(&a, &["a", "b"], len)?;
        let shown: Vec<String> = words.iter().map(|w| w.concat()).collect();
        println!("accepted parallel words of length {len}: {shown:?}");
    }
    Ok(())
}
