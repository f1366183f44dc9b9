//! Factor the dihedral resolvents of two Brumer quintics and read off the
//! relation between their splitting fields.

use quintic_fields::families::ParamPoint;
use quintic_fields::resolvents::{ResolventBundle, ResolventKind};

fn main() -> quintic_fields::Result<()> {
    let left = ParamPoint::d5(5, -1);
    let right = ParamPoint::d5(0, 1);
    for i in 1..=4 {
        let b = ResolventBundle::build(ResolventKind::F(i), &left, &right)?;
        let j = b.to_json()?;
        let parts: Vec<String> = j
            .factorization
            .iter()
            .map(|f| {
                if f.mult > 1 {
                    format!("({})^{}", f.text, f.mult)
                } else {
                    format!("({})", f.text)
                }
            })
            .collect();
        println!("F{i}: DT {} = {}", j.dt_fold, parts.join(""));
    }
    let v = quintic_fields::classify::compare(&left, &right)?;
    println!("{} {:?}", v.relation, v.table_row);
    Ok(())
}
