//! Compare two Frobenius quintics over their common quadratic field.

use quintic_fields::classify::compare;
use quintic_fields::families::ParamPoint;

fn main() -> quintic_fields::Result<()> {
    for (l, r) in [
        ((-3, -3), (3, 0)),
        ((7, 1), (-7, 4)),
        ((-3, -3), (3, 1)),
        ((1, 1), (2, 1)),
    ] {
        let v = compare(&ParamPoint::f20r(l.0, l.1), &ParamPoint::f20r(r.0, r.1))?;
        println!(
            "{} vs {}: {} {}",
            v.left.point,
            v.right.point,
            v.relation,
            v.table_row.as_deref().unwrap_or("-")
        );
        for d in &v.resolvent_dts {
            println!("  {} over {}: {}", d.kind, d.field, d.fold);
        }
        for w in &v.witnesses {
            println!("  root of {}: {}", w.resolvent, w.root);
        }
    }
    Ok(())
}
