//! Weighted word automata as representations: a word becomes the circuit
//! `⊤ ↕ a_n ↕ .. ↕ a_1 ↕ ⊥` and evaluates to its coefficient.

use prokit::automata::{word_to_circuit, WordAutomaton};
use prokit::semiring::{Natural, Semiring};

fn main() -> prokit::Result<()> {
    let n = |x: u64| Natural::from(x);
    // (ab)*: state 1 initial and final
    let ab = WordAutomaton::from_rows(
        vec![n(1), n(0)],
        vec![("a", vec![vec![n(0), n(1)], vec![n(0), n(0)]]), ("b", vec![vec![n(0), n(0)], vec![n(1), n(0)]])],
        vec![n(1), n(0)],
    )?;
    // counts the letters a
    let count = WordAutomaton::from_rows(
        vec![n(1), n(0)],
        vec![("a", vec![vec![n(1), n(1)], vec![n(0), n(1)]]), ("b", vec![vec![n(1), n(0)], vec![n(0), n(1)]])],
        vec![n(0), n(1)],
    )?;
    let (_, mu) = ab.word_rep()?;
    let (_, nu) = count.word_rep()?;
    let sum = mu.quasi_sum(&nu)?;
    let product = mu.hadamard(&nu)?;
    println!("{:>6} {:>5} {:>5} {:>5} {:>5}", "word", "(ab)*", "#a", "sum", "prod");
    for w in ["", "ab", "aa", "abab", "ba", "aab"] {
        let letters: Vec<String> = w.chars().map(String::from).collect();
        let c = word_to_circuit(&letters);
        let value = |r: &prokit::represent::Representation<Natural>| r.eval(&c).map(|h| h.as_scalar().expect("closed").clone());
        assert_eq!(value(&mu)?, ab.behavior_coeff(&letters)?);
        assert_eq!(value(&sum)?, ab.behavior_coeff(&letters)?.add(&count.behavior_coeff(&letters)?));
        println!("{:>6} {:>5} {:>5} {:>5} {:>5}", format!("'{w}'"), value(&mu)?.to_string(), value(&nu)?.to_string(), value(&sum)?.to_string(), value(&product)?.to_string());
    }
    Ok(())
}
