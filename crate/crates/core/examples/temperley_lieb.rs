//! Temperley-Lieb diagrams, the two-dimensional cup/cap representation and
//! the trace experiment.

use prokit::temperley_lieb::{self as tl, TlDiagram};

fn main() -> prokit::Result<()> {
    let mu = tl::standard_rep();
    let d = tl::check_relations(&mu)?;
    println!("snakes evaluate to the identity, the loop to {d}");

    let u1 = TlDiagram::u_generator(3, 1)?;
    let u2 = TlDiagram::u_generator(3, 2)?;
    println!("U1 = {u1}");
    println!("U1 U1 = {}", u1.compose(&u1)?);
    println!("U1 U2 U1 = {}", u1.compose(&u2)?.compose(&u1)?);

    for word in [vec![], vec![1], vec![1, 2], vec![1, 3], vec![2, 1, 3, 2]] {
        let t = tl::u_word_term(4, &word)?;
        let case = tl::conjecture_check(&t, &mu)?;
        println!(
            "n=4 word {word:?}: tr = {}, N^triv d^ntriv = {} (triv {}, ntriv {})",
            case.lhs, case.rhs, case.counts.triv, case.counts.ntriv
        );
    }

    let report = tl::conjecture_experiment(4, 4)?;
    println!("{} of {} words with at most 4 generators on at most 4 strands agree", report.agreements(), report.total());
    if let Some(row) = report.shortest_counterexample() {
        println!("shortest counterexample: n={} word {:?}: {} vs {}", row.n, row.word, row.lhs, row.rhs);
    }
    let winding = report.rows.iter().filter(|r| r.annular_equal).count();
    println!("counting loops around the closure annulus with N instead: {winding} of {} agree", report.total());
    Ok(())
}
