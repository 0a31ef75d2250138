//! Circuit terms, their wiring diagrams, connected components and the
//! enumeration of circuits up to isomorphism.

use prokit::circuit::{connected_components, enumerate_circuits, is_connected, ChipDecl, Signature, Term};

fn main() -> prokit::Result<()> {
    let sig = Signature::new([ChipDecl::new("f", 1, 1), ChipDecl::new("m", 1, 2)])?;
    let f = sig.chip("f")?;
    let m = sig.chip("m")?;

    // two factorizations of the same diagram
    let one = f.hcomp(&Term::wire()).vcomp(&Term::wire().hcomp(&f))?;
    let two = f.hcomp(&f);
    println!("{one}  and  {two}  are the same circuit: {}", one.canonical_key() == two.canonical_key());
    println!("chip order matters: {}", f.vcomp(&m)?.canonical_key() != m.vcomp(&f.hcomp(&f))?.canonical_key());

    let t = m.vcomp(&f.hcomp(&Term::wire()))?.hcomp(&f);
    println!("{t} has {} components:", connected_components(&t).len());
    for c in connected_components(&t) {
        println!("  {c}");
    }

    println!("{}", serde_json::to_string(&t.to_json()).expect("serializable"));

    for chips in 0..=3 {
        let all = enumerate_circuits(&sig, chips, 1, 2);
        let connected = all.iter().filter(|c| is_connected(c)).count();
        println!("arity (1,2), at most {chips} chips: {} circuits, {connected} connected", all.len());
    }
    Ok(())
}
