#![allow(dead_code)]

use combinatoria::Permutation;

/// Every permutation of 1..=n by recursive insertion, unordered.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in all_perms(n - 1) {
        for at in 0..=smaller.len() {
            let mut v = smaller.clone();
            v.insert(at, n);
            out.push(v);
        }
    }
    out
}

pub fn sn(n: usize) -> Vec<Permutation> {
    all_perms(n).into_iter().map(|v| Permutation::new(v).unwrap()).collect()
}

/// g p g⁻¹, with p applied after g⁻¹.
pub fn conjugate(g: &Permutation, p: &Permutation) -> Permutation {
    let gp = combinatoria::compose(g, p).unwrap();
    combinatoria::compose(&gp, &g.inverse()).unwrap()
}
