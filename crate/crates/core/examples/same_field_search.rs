//! Points on a small box whose splitting field equals that of f_{0,1}.
//!
//! Pass a half-width to widen the box, e.g. `cargo run --release --example same_field_search -- 100`.

use quintic_fields::classify::{search, Grid, SearchConfig};
use quintic_fields::families::{Family, ParamPoint};

fn main() -> quintic_fields::Result<()> {
    let w: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(60);
    let grid = Grid::new((-w, w), (-w, w));
    let found = search(Family::D5, &ParamPoint::d5(0, 1), &grid, &SearchConfig::default())?;
    for m in &found {
        let via: Vec<&str> = m.witnesses.iter().map(|w| w.resolvent.as_str()).collect();
        println!("{}  {:?}", m.right, via);
    }
    println!("{} of {} points", found.len(), grid.len());
    Ok(())
}
