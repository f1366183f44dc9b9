//! Lehmer's quintics inside the cyclic family, and a small scan for
//! coincident splitting fields along the line B = 1.

use quintic_fields::classify::{search_pairs, SearchConfig};
use quintic_fields::exactmath::rational::rat;
use quintic_fields::families::{brumer_d5, ht_c5_f, lehmer_params, ParamPoint};

fn main() -> quintic_fields::Result<()> {
    for n in -3..=3 {
        let (s, t) = lehmer_params(&rat(n));
        let same = ht_c5_f(&rat(2 * n + 3), &rat(1))? == brumer_d5(&s, &t);
        println!("n = {n}: s = {s}, t = {t}, agrees with the cyclic chart: {same}");
    }
    let ms: Vec<i64> = (-12..=12).collect();
    let mut pairs = Vec::new();
    for (i, &m) in ms.iter().enumerate() {
        for &m2 in &ms[i + 1..] {
            pairs.push((ParamPoint::c5(2 * m + 3, 1), ParamPoint::c5(2 * m2 + 3, 1)));
        }
    }
    for hit in search_pairs(&pairs, &SearchConfig::default())? {
        println!("{} ~ {}: {}", hit.left, hit.right, hit.relation);
    }
    Ok(())
}
