//! Matroids over systems: signed determinants, Grassmann–Plücker maps of
//! matrices, the Plücker relations, bases and the exchange property.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::report::{AxiomOutcome, Report};

/// Largest determinant order.
pub const DET_LIMIT: usize = 8;
/// Default bounds on the Plücker sweep.
pub const GP_MAX_N: usize = 8;
pub const GP_MAX_M: usize = 4;

/// All permutations of `0..m` with their parity (true when odd).
pub fn permutations(m: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let m = used.len();
        if k == m {
            out.push((cur.clone(), odd));
            return;
        }
        for x in 0..m {
            if used[x] {
                continue;
            }
            // inversions contributed by x against the still unused smaller values
            let inv = (0..x).filter(|&y| !used[y]).count();
            used[x] = true;
            cur.push(x);
            go(k + 1, cur, used, odd ^ (inv % 2 == 1), out);
            cur.pop();
            used[x] = false;
        }
    }
    let mut out = Vec::new();
    go(0, &mut Vec::new(), &mut vec![false; m], false, &mut out);
    out
}

/// `Σ_π (−)^{sgn π} Π M[i, π(i)]` by Leibniz expansion.
pub fn signed_det<A: Algebra>(alg: &A, m: &[Vec<A::Elem>]) -> Result<A::Elem> {
    let k = m.len();
    if k > DET_LIMIT {
        return Err(Error::Resource(format!("determinant of order {k} exceeds {DET_LIMIT}")));
    }
    if m.iter().any(|r| r.len() != k) {
        return Err(Error::Domain("determinant needs a square grid".into()));
    }
    let mut acc = alg.zero();
    for (p, odd) in permutations(k) {
        let mut term = alg
            .one()
            .ok_or_else(|| Error::Unsupported(format!("{} has no unit", alg.name())))?;
        for (i, &j) in p.iter().enumerate() {
            term = alg
                .mul(&term, &m[i][j])
                .ok_or_else(|| Error::Domain(format!("product undefined in {}", alg.name())))?;
        }
        if odd {
            term = alg.neg(&term);
        }
        acc = alg
            .add(&acc, &term)
            .ok_or_else(|| Error::Domain(format!("sum undefined in {}", alg.name())))?;
    }
    Ok(acc)
}

/// A map `b : E^m → 𝒜` on `E = {1..n}`, stored on every tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpMap<E> {
    pub n: usize,
    pub m: usize,
    pub values: Vec<E>,
}

impl<E: Clone> GpMap<E> {
    /// Tabulates `f` on every tuple in lexicographic order.
    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(&[usize]) -> Result<E>) -> Result<Self> {
        let values = tuples(n, m).iter().map(|t| f(t)).collect::<Result<Vec<_>>>()?;
        Ok(GpMap { n, m, values })
    }

    pub fn index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.n + x)
    }

    pub fn get(&self, t: &[usize]) -> &E {
        &self.values[self.index(t)]
    }

    pub fn set(&mut self, t: &[usize], v: E) {
        let i = self.index(t);
        self.values[i] = v;
    }
}

/// All tuples in `{0..n}^m`, lexicographic.
pub fn tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn tuple_label(t: &[usize]) -> String {
    let v: Vec<String> = t.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", v.join(","))
}

/// Maximal minors of an `m × n` grid: `b(i₁..i_m)` is the signed determinant
/// of the selected columns. Requires a tangible maximal minor.
pub fn minors_gp_map<A: Algebra>(alg: &A, grid: &[Vec<A::Elem>]) -> Result<GpMap<A::Elem>> {
    let m = grid.len();
    let n = grid.first().map_or(0, |r| r.len());
    if m == 0 || grid.iter().any(|r| r.len() != n) {
        return Err(Error::Domain("matrix rows must be nonempty and of equal length".into()));
    }
    let b = GpMap::from_fn(n, m, |cols| {
        let sub: Vec<Vec<A::Elem>> = grid
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        signed_det(alg, &sub)
    })?;
    if !b.values.iter().any(|v| alg.is_tangible(v)) {
        return Err(Error::Precondition("no maximal minor is tangible".into()));
    }
    Ok(b)
}

/// Axiom outcomes of a map together with its bases.
#[derive(Clone, Debug)]
pub struct MatroidReport {
    pub report: Report,
    /// Increasing tuples (1-based) with tangible value.
    pub bases: Vec<Vec<usize>>,
}

/// Increasing tuples with tangible value, 1-based.
pub fn bases<A: Algebra>(alg: &A, b: &GpMap<A::Elem>) -> Vec<Vec<usize>> {
    tuples(b.n, b.m)
        .into_iter()
        .filter(|t| t.windows(2).all(|w| w[0] < w[1]) && alg.is_tangible(b.get(t)))
        .map(|t| t.iter().map(|x| x + 1).collect())
        .collect()
}

/// `t · b` for a tangible `t`.
pub fn scale<A: Algebra>(alg: &A, b: &GpMap<A::Elem>, t: &A::Elem) -> Result<GpMap<A::Elem>> {
    let values = b
        .values
        .iter()
        .map(|v| {
            alg.mul(t, v)
                .ok_or_else(|| Error::Domain("scaled value undefined".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GpMap { n: b.n, m: b.m, values })
}

fn check_bounds<E>(b: &GpMap<E>) -> Result<()> {
    if b.n > GP_MAX_N || b.m > GP_MAX_M {
        return Err(Error::Resource(format!(
            "Plücker sweep limited to n ≤ {GP_MAX_N}, m ≤ {GP_MAX_M}; got n = {}, m = {}",
            b.n, b.m
        )));
    }
    Ok(())
}

/// Conditions (i) to (iv) of a Grassmann–Plücker map. In strict mode values
/// must also lie in `𝒯₀`.
pub fn check_gp<A: Algebra>(alg: &A, b: &GpMap<A::Elem>, strict: bool) -> Result<MatroidReport> {
    check_bounds(b)?;
    let (n, m) = (b.n, b.m);
    let all = tuples(n, m);
    let mut r = Report::new(&alg.name(), false);
    let lab = |t: &[usize]| vec![tuple_label(t), alg.label(b.get(t))];

    let some = all.iter().any(|t| alg.is_tangible(b.get(t)));
    r.push(AxiomOutcome::from_witness(
        "gp-tangible-value",
        (!some).then(|| vec!["all values non-tangible".into()]),
    ));

    let repeated = |t: &[usize]| (0..t.len()).any(|i| (i + 1..t.len()).any(|j| t[i] == t[j]));
    let w = all
        .iter()
        .find(|t| repeated(t) && !alg.in_null(b.get(t)))
        .map(|t| lab(t));
    r.push(AxiomOutcome::from_witness("gp-repeated-null", w));

    let mut w = None;
    'alt: for t in &all {
        for i in 0..m.saturating_sub(1) {
            let mut s = t.clone();
            s.swap(i, i + 1);
            if *b.get(&s) != alg.neg(b.get(t)) {
                let mut v = lab(t);
                v.extend(lab(&s));
                w = Some(v);
                break 'alt;
            }
        }
    }
    r.push(AxiomOutcome::from_witness("gp-alternating", w));

    r.push(AxiomOutcome::from_witness("gp-plucker", plucker_witness(alg, b)?));

    if strict {
        let w = all
            .iter()
            .find(|t| {
                let v = b.get(t);
                !(alg.is_tangible(v) || *v == alg.zero())
            })
            .map(|t| lab(t));
        r.push(AxiomOutcome::from_witness("gp-values-tangible-or-zero", w));
    }
    Ok(MatroidReport {
        report: r,
        bases: bases(alg, b),
    })
}

/// The `i`-th Plücker summand `b(e₀..ê_i..e_m) b(e_i, f₂..f_m)`.
fn summand<A: Algebra>(alg: &A, b: &GpMap<A::Elem>, e: &[usize], f: &[usize], i: usize) -> Result<A::Elem> {
    let first: Vec<usize> = e.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
    let mut second = vec![e[i]];
    second.extend_from_slice(f);
    alg.mul(b.get(&first), b.get(&second))
        .ok_or_else(|| Error::Domain("Plücker product undefined".into()))
}

/// Least `(e₀..e_m; f₂..f_m)` whose Plücker sum is not in `A_Null`.
pub fn plucker_witness<A: Algebra>(alg: &A, b: &GpMap<A::Elem>) -> Result<Option<Vec<String>>> {
    check_bounds(b)?;
    let (n, m) = (b.n, b.m);
    let es = tuples(n, m + 1);
    let fs = tuples(n, m - 1);
    for e in &es {
        for f in &fs {
            let mut acc = alg.zero();
            for i in 0..=m {
                let mut c = summand(alg, b, e, f, i)?;
                if i % 2 == 1 {
                    c = alg.neg(&c);
                }
                acc = alg
                    .add(&acc, &c)
                    .ok_or_else(|| Error::Domain("Plücker sum undefined".into()))?;
            }
            if !alg.in_null(&acc) {
                return Ok(Some(vec![tuple_label(e), tuple_label(f), alg.label(&acc)]));
            }
        }
    }
    Ok(None)
}

/// Outcome of the exchange sweep.
#[derive(Clone, Debug)]
pub struct ExchangeOutcome {
    pub outcome: AxiomOutcome,
    /// Number of premises checked.
    pub premises: usize,
    /// For each `i ∈ 1..m`, how often it was the first index found.
    pub found: Vec<usize>,
}

/// For `b(e₁..e_m) b(e₀,f₂..f_m) ∈ 𝒯`, some `1 ≤ i ≤ m` with
/// `b(e₁..e_m) b(e₀,f₂..f_m) ≤ b(e₀..ê_i..e_m) b(e_i,f₂..f_m)` in the pre-order.
///
/// Refused unless the algebra is known to be bipotent and cancellative.
pub fn check_exchange<A: Algebra>(alg: &A, b: &GpMap<A::Elem>) -> Result<ExchangeOutcome> {
    check_bounds(b)?;
    if alg.bipotent() != Some(true) || alg.cancellative() != Some(true) {
        return Err(Error::Precondition(format!(
            "exchange needs a bipotent cancellative triple; {} reports bipotent = {:?}, cancellative = {:?}",
            alg.name(),
            alg.bipotent(),
            alg.cancellative()
        )));
    }
    let (n, m) = (b.n, b.m);
    let mut premises = 0;
    let mut found = vec![0; m];
    for e in tuples(n, m + 1) {
        for f in tuples(n, m - 1) {
            let c0 = summand(alg, b, &e, &f, 0)?;
            if !alg.is_tangible(&c0) {
                continue;
            }
            premises += 1;
            let mut hit = None;
            for i in 1..=m {
                let ci = summand(alg, b, &e, &f, i)?;
                let le = alg
                    .preorder_leq(&c0, &ci)
                    .ok_or_else(|| Error::Unsupported(format!("no pre-order on {}", alg.name())))?;
                if le {
                    hit = Some(i);
                    break;
                }
            }
            match hit {
                Some(i) => found[i - 1] += 1,
                None => {
                    return Ok(ExchangeOutcome {
                        outcome: AxiomOutcome::fail("exchange", vec![tuple_label(&e), tuple_label(&f), alg.label(&c0)]),
                        premises,
                        found,
                    })
                }
            }
        }
    }
    Ok(ExchangeOutcome {
        outcome: AxiomOutcome::pass("exchange"),
        premises,
        found,
    })
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn rational_det(m: &[Vec<BigRational>]) -> BigRational {
    let k = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::from_integer(BigInt::from(1));
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..k {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..k {
                let d = &factor * &a[col][c];
                a[r][c] -= d;
            }
        }
    }
    det
}

/// Exact maximal minor on the given columns.
pub fn rational_minor(grid: &[Vec<BigRational>], cols: &[usize]) -> BigRational {
    let sub: Vec<Vec<BigRational>> = grid
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    rational_det(&sub)
}

/// `−v_p(x)`, or `None` for zero.
pub fn neg_valuation(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let count = |v: &BigInt| {
        let mut v = v.abs();
        let mut k = 0i64;
        while (&v % &pb).is_zero() {
            v /= &pb;
            k += 1;
        }
        k
    };
    Some(count(x.denom()) - count(x.numer()))
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign_of(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{q, sign_semiring, St, Supertropical};

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn permutation_parities() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().filter(|(_, odd)| *odd).count(), 3);
        assert!(p.contains(&(vec![1, 0, 2], true)));
        assert!(p.contains(&(vec![1, 2, 0], false)));
    }

    #[test]
    fn identity_over_signs_is_one() {
        let l = sign_semiring();
        let (z, o) = (l.zero, l.index_of("1").unwrap());
        let grid = vec![vec![o, z, z], vec![z, o, z], vec![z, z, o]];
        assert_eq!(signed_det(&l, &grid).unwrap(), o);
    }

    #[test]
    fn supertropical_two_by_two() {
        let st = Supertropical;
        let grid = vec![vec![St::Tan(q(3)), St::Tan(q(1))], vec![St::Tan(q(0)), St::Tan(q(2))]];
        assert_eq!(signed_det(&st, &grid).unwrap(), St::Tan(q(5)));
    }

    #[test]
    fn rational_det_matches_formula() {
        let m = vec![vec![r(2), r(3)], vec![r(5), r(7)]];
        assert_eq!(rational_det(&m), r(-1));
        assert_eq!(
            neg_valuation(&BigRational::new(BigInt::from(3), BigInt::from(8)), 2),
            Some(3)
        );
        assert_eq!(neg_valuation(&r(12), 2), Some(-2));
    }

    #[test]
    fn too_large_determinant_is_resource_error() {
        let st = Supertropical;
        let grid = vec![vec![St::Zero; 9]; 9];
        assert!(matches!(signed_det(&st, &grid), Err(Error::Resource(_))));
    }
}
