//! Independent checks: diagonal similarity by propagation, `B_n`-similarity
//! by linear algebra, and brute-force orbits over small prime fields.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::arith::{Field, Scalar, SquareMatrix};
use crate::canon::canon;
use crate::coset::rank_profile;
use crate::error::{Error, Result};
use crate::graph::UnionFind;

/// `a_ij` if nonzero, else `1/a_ji` if that is nonzero, else `0`
/// (1-based indices).
pub fn f_value(a: &SquareMatrix, i: usize, j: usize) -> Scalar {
    let direct = a.get(i - 1, j - 1);
    if !direct.is_zero() {
        return direct.clone();
    }
    a.get(j - 1, i - 1).inverse().unwrap_or_else(|| a.field().zero())
}

fn check_same_shape(a: &SquareMatrix, c: &SquareMatrix) -> Result<()> {
    if a.dim() != c.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: c.dim() });
    }
    if a.field() != c.field() {
        return Err(Error::FieldMismatch { left: a.field().to_string(), right: c.field().to_string() });
    }
    Ok(())
}

/// A nonsingular diagonal `D` with `D·A·D⁻¹ = C`, if one exists.
///
/// Patterns must agree; then `d_1 = 1` on each component (rooted at its
/// smallest vertex) and `d_j = d_i f_ij(A) / f_ij(C)` along the undirected
/// support, after which every entry is checked.
pub fn dn_similar(a: &SquareMatrix, c: &SquareMatrix) -> Result<Option<SquareMatrix>> {
    check_same_shape(a, c)?;
    let n = a.dim();
    let field = a.field();
    for i in 0..n {
        for j in 0..n {
            if a.is_zero_at(i, j) != c.is_zero_at(i, j) {
                return Ok(None);
            }
        }
    }
    let mut d: Vec<Option<Scalar>> = vec![None; n + 1];
    for root in 1..=n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(field.one());
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 1..=n {
                if j == i || d[j].is_some() {
                    continue;
                }
                let fa = f_value(a, i, j);
                if fa.is_zero() {
                    continue;
                }
                let fc = f_value(c, i, j);
                let di = d[i].clone().expect("visited");
                d[j] = Some(&(&di * &fa) * &fc.inverse().expect("same pattern"));
                queue.push_back(j);
            }
        }
    }
    let diag: Vec<Scalar> = d.into_iter().skip(1).map(|x| x.expect("all visited")).collect();
    let dm = SquareMatrix::diagonal(field, diag.clone());
    let inv = SquareMatrix::diagonal(field, diag.iter().map(|x| x.inverse().expect("nonzero")).collect());
    Ok((a.conjugate_with(&dm, &inv)? == *c).then_some(dm))
}

/// Largest solution space searched exhaustively over a prime field.
const MAX_FINITE_SEARCH: u64 = 1 << 20;

/// An invertible upper-triangular `T` with `T·A·T⁻¹ = C`, if one exists.
///
/// Solves the linear system `T·A = C·T` over upper-triangular `T`. Over ℚ
/// a solution with nonzero diagonal exists iff no diagonal coordinate
/// vanishes on the whole solution space; one is found along a moment
/// curve. Over `GF(p)` the solution space is searched exhaustively.
pub fn bn_similar(a: &SquareMatrix, c: &SquareMatrix) -> Result<Option<SquareMatrix>> {
    check_same_shape(a, c)?;
    let n = a.dim();
    let field = a.field();
    let vars: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index: HashMap<(usize, usize), usize> = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    // (T A - C T)_{ij} = sum_k t_ik a_kj - sum_k c_ik t_kj.
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![field.zero(); vars.len()];
            for k in i..n {
                let v = a.get(k, j);
                if !v.is_zero() {
                    let x = index[&(i, k)];
                    row[x] = &row[x] + v;
                }
            }
            for k in 0..=j {
                let v = c.get(i, k);
                if !v.is_zero() {
                    let x = index[&(k, j)];
                    row[x] = &row[x] - v;
                }
            }
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let basis = null_space(rows, vars.len(), field);
    let diag_idx: Vec<usize> = (0..n).map(|i| index[&(i, i)]).collect();
    if diag_idx.iter().any(|&x| basis.iter().all(|b| b[x].is_zero())) {
        return Ok(None);
    }
    let build = |coeffs: &[Scalar]| -> Option<SquareMatrix> {
        let mut t = SquareMatrix::zero(field, n);
        for (k, &(i, j)) in vars.iter().enumerate() {
            let mut v = field.zero();
            for (b, cf) in basis.iter().zip(coeffs) {
                v = &v + &(&b[k] * cf);
            }
            t.set(i, j, v);
        }
        (0..n).all(|i| !t.is_zero_at(i, i)).then_some(t)
    };
    let found = match field.order() {
        None => {
            // Each diagonal entry is a nonzero polynomial of degree < dim in s.
            let limit = (basis.len() * n + 2) as i64;
            (1..=limit).find_map(|s| {
                let mut power = field.one();
                let base = field.from_i64(s);
                let coeffs: Vec<Scalar> = basis
                    .iter()
                    .map(|_| {
                        let cur = power.clone();
                        power = &power * &base;
                        cur
                    })
                    .collect();
                build(&coeffs)
            })
        }
        Some(p) => {
            let total = (p as u64).checked_pow(basis.len() as u32).filter(|&t| t <= MAX_FINITE_SEARCH);
            let Some(total) = total else {
                return Err(Error::SizeCap(format!(
                    "solution space of dimension {} over GF({p})",
                    basis.len()
                )));
            };
            (0..total).find_map(|code| {
                let mut rest = code;
                let coeffs: Vec<Scalar> = basis
                    .iter()
                    .map(|_| {
                        let digit = rest % p as u64;
                        rest /= p as u64;
                        field.from_i64(digit as i64)
                    })
                    .collect();
                build(&coeffs)
            })
        }
    };
    match found {
        Some(t) => {
            let t_inv = t.invert_triangular()?;
            if a.conjugate_with(&t, &t_inv)? != *c {
                return Err(Error::Internal("similarity witness failed".into()));
            }
            Ok(Some(t))
        }
        None => Ok(None),
    }
}

/// A basis of `{x : rows·x = 0}` via reduced row echelon form.
fn null_space(mut rows: Vec<Vec<Scalar>>, width: usize, field: Field) -> Vec<Vec<Scalar>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().expect("pivot is nonzero");
        for x in &mut rows[r] {
            *x = &*x * &inv;
        }
        for k in 0..rows.len() {
            if k == r || rows[k][col].is_zero() {
                continue;
            }
            let factor = rows[k][col].clone();
            let pivot_row = rows[r].clone();
            for (x, p) in rows[k].iter_mut().zip(&pivot_row).take(width) {
                *x = &*x - &(&factor * p);
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); width];
            v[f] = field.one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[k][f];
            }
            v
        })
        .collect()
}

/// Largest `|N_n(GF(p))|` accepted by [`bn_orbits_bruteforce`].
pub const MAX_ORBIT_TABLE: u64 = 1 << 16;

/// Every strictly upper-triangular matrix over `GF(p)` labelled by its
/// `B_n`-orbit.
///
/// Matrices are indexed by their above-diagonal entries read row by row as
/// base-`p` digits, first entry least significant. Orbit ids are assigned
/// in order of each orbit's smallest index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTable {
    pub field: Field,
    pub n: usize,
    pub orbit_of: Vec<usize>,
    pub orbit_count: usize,
}

impl OrbitTable {
    fn prime(&self) -> u64 {
        self.field.order().expect("finite field") as u64
    }

    fn positions(&self) -> Vec<(usize, usize)> {
        positions(self.n)
    }

    pub fn len(&self) -> usize {
        self.orbit_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit_of.is_empty()
    }

    /// The matrix with the given index.
    pub fn matrix(&self, index: usize) -> SquareMatrix {
        decode(self.field, self.n, &self.positions(), self.prime(), index as u64)
    }

    /// The index of a strictly upper-triangular matrix over the table's field.
    pub fn index_of(&self, m: &SquareMatrix) -> usize {
        encode(m, &self.positions(), self.prime()) as usize
    }

    /// Members of every orbit, by orbit id.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.orbit_count];
        for (idx, &o) in self.orbit_of.iter().enumerate() {
            out[o].push(idx);
        }
        out
    }

    /// One line per matrix: the above-diagonal entries, then the orbit id.
    pub fn to_text(&self) -> String {
        let mut out = format!("# field={} n={} orbits={}\n", self.field, self.n, self.orbit_count);
        let pos = self.positions();
        for (idx, &o) in self.orbit_of.iter().enumerate() {
            let m = decode(self.field, self.n, &pos, self.prime(), idx as u64);
            let entries: Vec<String> = pos.iter().map(|&(i, j)| m.get(i, j).to_string()).collect();
            out.push_str(&entries.join(" "));
            out.push_str(&format!(" {o}\n"));
        }
        out
    }
}

fn positions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn encode(m: &SquareMatrix, pos: &[(usize, usize)], p: u64) -> u64 {
    pos.iter().rev().fold(0, |acc, &(i, j)| {
        let digit = match m.get(i, j) {
            Scalar::Modular(r) => r.value() as u64,
            Scalar::Rational(_) => unreachable!("finite field table"),
        };
        acc * p + digit
    })
}

fn decode(field: Field, n: usize, pos: &[(usize, usize)], p: u64, mut code: u64) -> SquareMatrix {
    let mut m = SquareMatrix::zero(field, n);
    for &(i, j) in pos {
        m.set(i, j, field.from_i64((code % p) as i64));
        code /= p;
    }
    m
}

/// Order in which [`bn_orbits_with_order`] applies the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorOrder {
    Forward,
    Reverse,
}

/// Orbits of `B_n` on `N_n(GF(p))` by closure under `I + λE_pq` and the
/// single-position diagonal generators.
pub fn bn_orbits_bruteforce(field: Field, n: usize) -> Result<OrbitTable> {
    bn_orbits_with_order(field, n, GeneratorOrder::Forward)
}

/// [`bn_orbits_bruteforce`] with the generator list in a chosen order.
pub fn bn_orbits_with_order(field: Field, n: usize, order: GeneratorOrder) -> Result<OrbitTable> {
    let Some(p) = field.order() else {
        return Err(Error::OutOfRange("orbit tables need a prime field".into()));
    };
    let p = p as u64;
    let pos = positions(n);
    let size = p
        .checked_pow(pos.len() as u32)
        .filter(|&s| s <= MAX_ORBIT_TABLE)
        .ok_or_else(|| Error::SizeCap(format!("|N_{n}(GF({p}))| exceeds {MAX_ORBIT_TABLE}")))?;
    let units: Vec<Scalar> = (1..p as i64).map(|v| field.from_i64(v)).collect();
    let mut generators: Vec<SquareMatrix> = Vec::new();
    for &(a, b) in &pos {
        for lambda in &units {
            generators.push(SquareMatrix::elementary(field, n, a, b, lambda.clone()));
        }
    }
    for k in 0..n {
        for d in units.iter().filter(|d| !d.is_one()) {
            let mut diag = vec![field.one(); n];
            diag[k] = d.clone();
            generators.push(SquareMatrix::diagonal(field, diag));
        }
    }
    if order == GeneratorOrder::Reverse {
        generators.reverse();
    }
    let inverses: Vec<SquareMatrix> = generators
        .iter()
        .map(|g| g.invert_triangular())
        .collect::<Result<_>>()?;
    let mut uf = UnionFind::new(size as usize);
    for code in 0..size {
        let m = decode(field, n, &pos, p, code);
        for (g, g_inv) in generators.iter().zip(&inverses) {
            let next = m.conjugate_with(g, g_inv)?;
            uf.union(code as usize, encode(&next, &pos, p) as usize);
        }
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let orbit_of: Vec<usize> = (0..size as usize)
        .map(|x| {
            let root = uf.find(x);
            let next = ids.len();
            *ids.entry(root).or_insert(next)
        })
        .collect();
    Ok(OrbitTable { field, n, orbit_count: ids.len(), orbit_of })
}

/// Outcome of [`check_canon_consistency`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub matrices: usize,
    pub orbits: usize,
    pub distinct_forms: usize,
    pub violations: Vec<String>,
}

impl ConsistencyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "matrices={} orbits={} forms={} violations={}",
            self.matrices,
            self.orbits,
            self.distinct_forms,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks that `canon` is constant on each orbit of `table`, injective
/// across orbits, and that its witness and rank profile are sound.
pub fn check_canon_consistency(table: &OrbitTable) -> ConsistencyReport {
    let mut report = ConsistencyReport {
        matrices: table.len(),
        orbits: table.orbit_count,
        ..Default::default()
    };
    let mut form_of_orbit: Vec<Option<SquareMatrix>> = vec![None; table.orbit_count];
    let mut orbit_of_form: HashMap<SquareMatrix, usize> = HashMap::new();
    for idx in 0..table.len() {
        let a = table.matrix(idx);
        let orbit = table.orbit_of[idx];
        let c = match canon(&a) {
            Ok(c) => c,
            Err(e) => {
                report.violations.push(format!("matrix {idx}: canon failed: {e}"));
                continue;
            }
        };
        match c.witness.apply(&a) {
            Ok(m) if m == c.matrix => {}
            _ => report.violations.push(format!("matrix {idx}: witness does not reach the form")),
        }
        if rank_profile(&a) != rank_profile(&c.matrix) {
            report.violations.push(format!("matrix {idx}: rank profile changed"));
        }
        match &form_of_orbit[orbit] {
            None => form_of_orbit[orbit] = Some(c.matrix.clone()),
            Some(m) if *m != c.matrix => report
                .violations
                .push(format!("orbit {orbit}: matrix {idx} gives {} unlike the orbit's first", c.graph_type)),
            Some(_) => {}
        }
        match orbit_of_form.get(&c.matrix) {
            None => {
                orbit_of_form.insert(c.matrix.clone(), orbit);
            }
            Some(&o) if o != orbit => report
                .violations
                .push(format!("orbits {o} and {orbit} share the form {}", c.graph_type)),
            Some(_) => {}
        }
    }
    report.distinct_forms = orbit_of_form.len();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphType;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn f_values() {
        let mut a = SquareMatrix::zero(q(), 3);
        a.set(0, 1, q().from_i64(5));
        a.set(2, 1, q().from_i64(4));
        assert_eq!(f_value(&a, 1, 2), q().from_i64(5));
        assert_eq!(f_value(&a, 2, 3), q().fraction(1, 4).unwrap());
        assert!(f_value(&a, 1, 3).is_zero());
    }

    fn cycle(x: i64) -> SquareMatrix {
        // Arcs 12, 13, 24, 34: one undirected cycle.
        let mut a = SquareMatrix::zero(q(), 4);
        for (i, j, v) in [(0, 1, 2), (0, 2, 3), (1, 3, 5), (2, 3, x)] {
            a.set(i, j, q().from_i64(v));
        }
        a
    }

    #[test]
    fn diagonal_similarity() {
        let a = cycle(7);
        assert_eq!(dn_similar(&a, &a).unwrap(), Some(SquareMatrix::identity(q(), 4)));
        let d: Vec<Scalar> = [1, -2, 3, 5].iter().map(|&v| q().from_i64(v)).collect();
        let dm = SquareMatrix::diagonal(q(), d.clone());
        let inv = SquareMatrix::diagonal(q(), d.iter().map(|x| x.inverse().unwrap()).collect());
        let c = a.conjugate_with(&dm, &inv).unwrap();
        let w = dn_similar(&a, &c).unwrap().unwrap();
        assert!(w.is_nonsingular_diagonal());
        // Altering one weight on the cycle changes the cycle product.
        assert_eq!(dn_similar(&a, &cycle(8)).unwrap(), None);
        let mut other = a.clone();
        other.set(0, 3, q().one());
        assert_eq!(dn_similar(&a, &other).unwrap(), None);
    }

    #[test]
    fn triangular_similarity() {
        let t: GraphType = "124|37|56: 25|14|15|17".parse().unwrap();
        let a = t.realize(q(), &[]).unwrap();
        let b: GraphType = "124|37|56: 25".parse().unwrap();
        let b = b.realize(q(), &[]).unwrap();
        assert!(bn_similar(&a, &b).unwrap().is_some());
        let c = t.subpermutation().to_matrix(q());
        assert_eq!(bn_similar(&b, &c).unwrap(), None);
    }

    #[test]
    fn small_orbit_counts() {
        let gf2 = Field::prime(2).unwrap();
        assert_eq!(bn_orbits_bruteforce(gf2, 2).unwrap().orbit_count, 2);
        let t3 = bn_orbits_bruteforce(gf2, 3).unwrap();
        assert_eq!(t3.len(), 8);
        for idx in 0..t3.len() {
            assert_eq!(t3.index_of(&t3.matrix(idx)), idx);
        }
        assert!(bn_orbits_bruteforce(q(), 3).is_err());
        assert!(bn_orbits_bruteforce(gf2, 7).is_err());
    }

    #[test]
    fn canon_matches_orbits_gf2_n3() {
        let t = bn_orbits_bruteforce(Field::prime(2).unwrap(), 3).unwrap();
        let r = check_canon_consistency(&t);
        assert!(r.is_clean(), "{r}");
        assert_eq!(r.distinct_forms, t.orbit_count);
    }

    #[test]
    fn table_text_lines() {
        let t = bn_orbits_bruteforce(Field::prime(3).unwrap(), 2).unwrap();
        let text = t.to_text();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(1).unwrap().starts_with("0 "));
    }
}
