//! Unnormalized Walsh-Hadamard transform over `GF(2)^K` on exact integers.
//!
//! `H(f)(u) = Σ_v (-1)^{u·v} f(v)`. Applying it twice multiplies by `2^K`,
//! and it turns XOR convolution into pointwise multiplication.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// In-place transform; `data.len()` must be a power of two.
pub fn fwht(data: &mut [i128]) {
    let n = data.len();
    assert!(n.is_power_of_two(), "length {n} is not a power of two");
    let mut half = 1;
    while half < n {
        for block in (0..n).step_by(2 * half) {
            for i in block..block + half {
                let (x, y) = (data[i], data[i + half]);
                data[i] = x + y;
                data[i + half] = x - y;
            }
        }
        half *= 2;
    }
}

/// `(f ⊛ g)(h) = Σ_{u ⊕ v = h} f(u) g(v)` through the transform.
pub fn xor_convolution(f: &[u64], g: &[u64]) -> Result<Vec<u64>> {
    assert_eq!(f.len(), g.len(), "operand lengths differ");
    let n = f.len();
    let mut a: Vec<i128> = f.iter().map(|&x| i128::from(x)).collect();
    let mut b: Vec<i128> = g.iter().map(|&x| i128::from(x)).collect();
    fwht(&mut a);
    fwht(&mut b);
    for (x, y) in a.iter_mut().zip(&b) {
        *x = x.checked_mul(*y).ok_or(Error::Overflow)?;
    }
    fwht(&mut a);
    a.into_iter()
        .map(|x| {
            debug_assert_eq!(x % n as i128, 0);
            u64::try_from(x / n as i128).map_err(|_| Error::Overflow)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn naive_transform(f: &[i128]) -> Vec<i128> {
        (0..f.len())
            .map(|u| {
                f.iter()
                    .enumerate()
                    .map(|(v, &x)| if (u & v).count_ones() % 2 == 0 { x } else { -x })
                    .sum()
            })
            .collect()
    }

    fn naive_convolution(f: &[u64], g: &[u64]) -> Vec<u64> {
        let mut out = vec![0; f.len()];
        for (u, &x) in f.iter().enumerate() {
            for (v, &y) in g.iter().enumerate() {
                out[u ^ v] += x * y;
            }
        }
        out
    }

    proptest! {
        #[test]
        fn matches_definition(k in 0u32..7, seed in proptest::collection::vec(-50i128..50, 64)) {
            let f = &seed[..1 << k];
            let mut fast = f.to_vec();
            fwht(&mut fast);
            prop_assert_eq!(&fast, &naive_transform(f));
            fwht(&mut fast);
            prop_assert!(fast.iter().zip(f).all(|(&a, &b)| a == b << k));
        }

        #[test]
        fn convolution_theorem(k in 0u32..6, f in proptest::collection::vec(0u64..20, 32), g in proptest::collection::vec(0u64..20, 32)) {
            let (f, g) = (&f[..1 << k], &g[..1 << k]);
            prop_assert_eq!(xor_convolution(f, g).unwrap(), naive_convolution(f, g));
        }
    }
}
