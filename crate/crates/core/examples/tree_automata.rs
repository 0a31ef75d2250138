//! Bottom-up tree automata as boolean representations.

use prokit::automata::{tree_to_circuit, Tree, TreeAutomaton};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> prokit::Result<()> {
    let alphabet = [("a", 2), ("b", 0), ("c", 0)];
    // accepts the trees with an even number of leaves `b`
    let mut even = TreeAutomaton::new(2, alphabet.iter().map(|(l, r)| (l.to_string(), *r)), [1])?;
    // state 1: even, state 2: odd
    even.add_transition("b", &[], 2)?;
    even.add_transition("c", &[], 1)?;
    for (x, y) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        even.add_transition("a", &[x, y], (x + y) % 2 + 1)?;
    }
    let (_, mu) = even.tree_rep()?;
    let t = Tree::node("a", vec![Tree::leaf("b"), Tree::node("a", vec![Tree::leaf("c"), Tree::leaf("b")])]);
    let c = tree_to_circuit(&t);
    println!("{t} becomes {c}");
    println!("accepted: δ* says {}, the circuit evaluates to {}", even.accepts(&t)?, mu.eval(&c)?.as_scalar().expect("closed"));

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let random = TreeAutomaton::random(3, &alphabet, 0.4, &mut rng)?;
    let (_, rmu) = random.tree_rep()?;
    let trees = Tree::enumerate(&alphabet, 7);
    let agree = trees
        .iter()
        .filter(|t| random.accepts(t).ok() == rmu.eval(&tree_to_circuit(t)).ok().map(|h| h.as_scalar().expect("closed").0))
        .count();
    println!("random 3-state automaton: {agree} of {} trees with at most 7 nodes agree", trees.len());
    Ok(())
}
