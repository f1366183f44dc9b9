//! Galois groups and quadratic invariants of a few Brumer quintics.

use quintic_fields::classify::identify_group;
use quintic_fields::exactmath::polyq::{discriminant, format_poly};
use quintic_fields::families::{delta_value, ParamPoint};

fn main() -> quintic_fields::Result<()> {
    for (s, t) in [(0, 1), (2, 1), (-18, 1), (-7, 1), (5, -1), (1, 3)] {
        let pt = ParamPoint::d5(s, t);
        let f = pt.polynomial()?;
        let (sq, tq) = pt.values();
        let delta = delta_value(sq, tq);
        let g = identify_group(&pt)?;
        println!("{pt}: {}", format_poly(&f));
        println!("  delta = {delta}, disc = {}, group {}", discriminant(&f)?, g.name);
    }
    Ok(())
}
