//! PRO automata on brick walls: membership, near misses, and the closure
//! under intersection and union.

use prokit::automata::bossut;
use prokit::circuit::Term;

fn main() -> prokit::Result<()> {
    let a = bossut::automaton();
    let wall = bossut::displayed_wall();
    println!("8-wide wall with 4 rows: {wall}");
    println!("  accepted: {} (by enumeration: {})", a.accepts(&wall)?, a.accepts_by_enumeration(&wall)?);
    for (name, t) in bossut::near_walls() {
        println!("  {name}: accepted {}", a.accepts(&t)?);
    }
    for width in 1..=4 {
        let row: Vec<String> = (1..=4).map(|rows| format!("{}", u8::from(a.accepts(&bossut::wall(1, width, rows)).unwrap_or(false)))).collect();
        println!("  width {width}, 1..4 rows starting aligned: {}", row.join(" "));
    }
    let both = a.intersect(&a)?;
    let either = a.union(&a)?;
    let probe = bossut::brick().hcomp(&Term::wires(2));
    println!(
        "{probe}: A {}, A∩A {}, A∪A {} (states {}, {}, {})",
        a.accepts(&probe)?,
        both.accepts(&probe)?,
        either.accepts(&probe)?,
        a.dim(),
        both.dim(),
        either.dim()
    );
    Ok(())
}
