//! Closed-form transcriptions of the named corollaries, written out term
//! by term in `n, m, Δ, d_2, d_{n-1}, δ` and `ID`. They share no code with
//! the kernel and serve as a second opinion when a check fails.
//!
//! The closed forms square the leading degrees and use `(a + b)/2` inside
//! the deviation term. Degree sums stay linear in `2m - d_j - d_k`.

use crate::bounds::BoundId;
use crate::graph::DegreeSequence;
use crate::scalar::{int, rat, Rational};

struct Params {
    n: Rational,
    two_m: Rational,
    dmax: Rational,
    d2: Rational,
    dn1: Rational,
    dmin: Rational,
}

fn sq(x: Rational) -> Rational {
    &x * &x
}

/// `s²/n' + (a-b)²/2 + 2n'/(n'-2) (s/n' - (a+b)/2)²` for `n'` values with
/// sum `s`, the common shape of every corollary.
fn shape(count: &Rational, total: &Rational, a: &Rational, b: &Rational) -> Rational {
    let half = rat(1, 2);
    let two = int(2);
    sq(total.clone()) / count
        + &half * sq(a - b)
        + &two * count / (count - &two) * sq(total / count - (a + b) * &half)
}

/// The pair bound on `M1` from `n`, `2m` and the two chosen degrees.
pub fn pair_formula(n: usize, two_m: usize, a: usize, b: usize) -> Rational {
    let v = |x: usize| int(x as i64);
    shape(&v(n), &v(two_m), &v(a), &v(b))
}

/// Value of a named corollary from its closed form. `None` when the id is
/// not a corollary or its hypothesis fails.
pub fn transcribed(ds: &DegreeSequence, id: BoundId) -> Option<Rational> {
    let n = ds.len();
    let layout = id.layout()?;
    if n < layout.min_order {
        return None;
    }
    let p = Params {
        n: int(n as i64),
        two_m: int(ds.degree_sum() as i64),
        dmax: int(ds.max() as i64),
        d2: int(ds.second() as i64),
        dn1: int(ds.second_min() as i64),
        dmin: int(ds.min() as i64),
    };
    let one = int(1);
    let two = int(2);
    Some(match id {
        BoundId::CorZte2 => shape(&p.n, &p.two_m, &p.dmax, &p.dmin),
        BoundId::CorZ2te1 => shape(&p.n, &p.two_m, &p.dn1, &p.dmin),
        BoundId::CorZ2te2 => shape(&p.n, &p.two_m, &p.dmax, &p.d2),
        BoundId::CorZr31 => {
            sq(p.dmax.clone()) + shape(&(&p.n - &one), &(&p.two_m - &p.dmax), &p.d2, &p.dmin)
        }
        BoundId::CorZr32 => {
            sq(p.dmin.clone()) + shape(&(&p.n - &one), &(&p.two_m - &p.dmin), &p.dmax, &p.dn1)
        }
        BoundId::CorXu4 => {
            sq(p.dmax.clone())
                + sq(p.d2.clone())
                + shape(
                    &(&p.n - &two),
                    &(&p.two_m - &p.dmax - &p.d2),
                    &p.dn1,
                    &p.dmin,
                )
        }
        BoundId::CorZ24degree => {
            sq(p.dmax.clone())
                + sq(p.dmin.clone())
                + shape(
                    &(&p.n - &two),
                    &(&p.two_m - &p.dmax - &p.dmin),
                    &p.d2,
                    &p.dn1,
                )
        }
        BoundId::Mm1Pair | BoundId::Mm1One | BoundId::Mm1Two => {
            if ds.min() == 0 {
                return None;
            }
            let id_index: Rational = ds.as_slice().iter().map(|&d| rat(1, d as i64)).sum();
            let (imax, i2, in1, imin) =
                (p.dmax.recip(), p.d2.recip(), p.dn1.recip(), p.dmin.recip());
            match id {
                BoundId::Mm1Pair => shape(&p.n, &id_index, &imax, &imin),
                BoundId::Mm1One => {
                    sq(imax.clone()) + shape(&(&p.n - &one), &(&id_index - &imax), &i2, &imin)
                }
                _ => {
                    sq(imax.clone())
                        + sq(imin.clone())
                        + shape(&(&p.n - &two), &(&id_index - &imax - &imin), &i2, &in1)
                }
            }
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_table_values() {
        let g1 = DegreeSequence::from_degrees(vec![7, 6, 6, 5, 4, 4, 4, 2]);
        assert_eq!(transcribed(&g1, BoundId::CorZte2), Some(rat(1159, 6)));
        assert_eq!(transcribed(&g1, BoundId::CorZ2te1), Some(rat(572, 3)));
        assert_eq!(transcribed(&g1, BoundId::CorZ2te2), Some(rat(1135, 6)));
        assert_eq!(transcribed(&g1, BoundId::BaseXu2), None);
    }
}
