//! The prop of affine relations over a field: arrows are affine
//! subspaces of `K^dom ⊕ K^cod` in canonical constraint form, composed
//! relationally.
//!
//! Coordinate convention, fixed globally: domain coordinates first, then
//! codomain coordinates, each in port order. The empty subspace is a
//! legitimate relation and is represented structurally.

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::matrix::{self, ExactMatrix};
use crate::scalar::{FieldError, FieldKind, FieldResult, Scalar};

/// An affine relation `dom -> cod`: either empty, or the solution set of
/// `A v = b` over `K^(dom+cod)` with `[A|b]` kept in reduced row echelon
/// form with zero rows deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRelation {
    pub field: FieldKind,
    pub dom: usize,
    pub cod: usize,
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Empty,
    Constraints { a: ExactMatrix, b: Vec<Scalar> },
}

/// An affine subspace as an offset plus a linearly independent basis of
/// its linear part.
#[derive(Debug, Clone)]
pub struct SpanForm {
    pub offset: Vec<Scalar>,
    pub basis: Vec<Vec<Scalar>>,
}

impl AffineRelation {
    pub fn empty(field: FieldKind, dom: usize, cod: usize) -> AffineRelation {
        AffineRelation {
            field,
            dom,
            cod,
            body: Body::Empty,
        }
    }

    /// The full relation with no constraints.
    pub fn full(field: FieldKind, dom: usize, cod: usize) -> AffineRelation {
        AffineRelation {
            field,
            dom,
            cod,
            body: Body::Constraints {
                a: ExactMatrix::zero(field, 0, dom + cod),
                b: vec![],
            },
        }
    }

    /// Canonicalize a raw constraint system `A v = b`; an inconsistent
    /// system becomes `Empty`.
    pub fn from_constraints(field: FieldKind, dom: usize, cod: usize, a: ExactMatrix, b: Vec<Scalar>) -> AffineRelation {
        assert_eq!(a.cols, dom + cod, "constraint width mismatch");
        assert_eq!(a.rows, b.len());
        let rhs = ExactMatrix::from_fn(field, a.rows, 1, |i, _| b[i].clone());
        let aug = a.hstack(&rhs);
        let r = matrix::rref(&aug);
        if r.pivots.contains(&a.cols) {
            return AffineRelation::empty(field, dom, cod);
        }
        let nrows = r.pivots.len();
        let canon_a = ExactMatrix::from_fn(field, nrows, a.cols, |i, j| r.rref.get(i, j).clone());
        let canon_b = (0..nrows).map(|i| r.rref.get(i, a.cols).clone()).collect();
        AffineRelation {
            field,
            dom,
            cod,
            body: Body::Constraints { a: canon_a, b: canon_b },
        }
    }

    /// The identity relation on `n` coordinates.
    pub fn identity(field: FieldKind, n: usize) -> AffineRelation {
        let mut a = ExactMatrix::zero(field, n, 2 * n);
        for i in 0..n {
            a.set(i, i, field.one());
            a.set(i, n + i, field.from_i64(-1));
        }
        AffineRelation::from_constraints(field, n, n, a, vec![field.zero(); n])
    }

    /// The graph `{(v, Mv + t)}` of an affine map.
    pub fn graph(m: &ExactMatrix, t: &[Scalar]) -> AffineRelation {
        let field = m.field;
        assert_eq!(m.rows, t.len());
        // rows: M v - w = -t  encoded as [M | -I] (v;w) = -t
        let mut a = ExactMatrix::zero(field, m.rows, m.cols + m.rows);
        for i in 0..m.rows {
            for j in 0..m.cols {
                a.set(i, j, m.get(i, j).clone());
            }
            a.set(i, m.cols + i, field.from_i64(-1));
        }
        let b: Vec<Scalar> = t.iter().map(|x| -x).collect();
        AffineRelation::from_constraints(field, m.cols, m.rows, a, b)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.body, Body::Empty)
    }

    pub fn coords(&self) -> usize {
        self.dom + self.cod
    }

    /// Test membership of a concrete point `(u, v)` given as `dom+cod`
    /// scalars.
    pub fn contains(&self, point: &[Scalar]) -> bool {
        assert_eq!(point.len(), self.coords());
        match &self.body {
            Body::Empty => false,
            Body::Constraints { a, b } => a.mul_vec(point) == *b,
        }
    }

    /// Dimension of the affine subspace, or `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        match &self.body {
            Body::Empty => None,
            Body::Constraints { a, .. } => Some(self.coords() - a.rows),
        }
    }

    /// Convert to span form; `None` when empty.
    pub fn span_form(&self) -> Option<SpanForm> {
        match &self.body {
            Body::Empty => None,
            Body::Constraints { a, b } => match matrix::solve(a, b) {
                matrix::Solution::NoSolution => unreachable!("canonical constraints are consistent"),
                matrix::Solution::Solved { particular, kernel_basis } => Some(SpanForm {
                    offset: particular,
                    basis: kernel_basis,
                }),
            },
        }
    }

    /// Rebuild constraints from a span form over `dom + cod` coordinates.
    pub fn from_span(field: FieldKind, dom: usize, cod: usize, span: &SpanForm) -> AffineRelation {
        let n = dom + cod;
        assert_eq!(span.offset.len(), n);
        // constraint rows = basis of the left kernel of the span matrix
        let cols: Vec<Vec<Scalar>> = span.basis.clone();
        let bmat = ExactMatrix::from_fn(field, n, cols.len(), |i, j| cols[j][i].clone());
        let left_kernel = matrix::kernel(&bmat.transpose());
        let a = ExactMatrix::from_fn(field, left_kernel.len(), n, |i, j| left_kernel[i][j].clone());
        let b = a.mul_vec(&span.offset);
        AffineRelation::from_constraints(field, dom, cod, a, b)
    }

    /// Basis of the linear part of the subspace (empty basis for points).
    pub fn linear_basis(&self) -> Option<Vec<Vec<Scalar>>> {
        self.span_form().map(|s| s.basis)
    }

    fn check_field(&self, other: &AffineRelation) -> FieldResult<()> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Keep only the listed coordinates, existentially projecting out the
    /// rest. Indices refer to the combined `dom+cod` coordinate list; the
    /// result is reported as a state (`dom = 0`).
    pub fn project(&self, keep: &[usize]) -> AffineRelation {
        let n = self.coords();
        for &k in keep {
            assert!(k < n, "projection index out of range");
        }
        match &self.body {
            Body::Empty => AffineRelation::empty(self.field, 0, keep.len()),
            Body::Constraints { a, b } => {
                // Reorder columns as [eliminated | kept | rhs], row reduce, and
                // retain rows supported entirely on the kept block: exactly the
                // constraints that survive existential elimination over a field.
                let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
                let ncols = elim.len() + keep.len();
                let reordered = ExactMatrix::from_fn(self.field, a.rows, ncols + 1, |i, j| {
                    if j < elim.len() {
                        a.get(i, elim[j]).clone()
                    } else if j < ncols {
                        a.get(i, keep[j - elim.len()]).clone()
                    } else {
                        b[i].clone()
                    }
                });
                let r = matrix::rref(&reordered);
                let mut rows = Vec::new();
                let mut rhs = Vec::new();
                for i in 0..r.rref.rows {
                    let touches_elim = (0..elim.len()).any(|j| !r.rref.get(i, j).is_zero());
                    if touches_elim {
                        continue;
                    }
                    let row: Vec<Scalar> = (0..keep.len()).map(|j| r.rref.get(i, elim.len() + j).clone()).collect();
                    let rb = r.rref.get(i, ncols).clone();
                    if row.iter().all(|x| x.is_zero()) {
                        if !rb.is_zero() {
                            return AffineRelation::empty(self.field, 0, keep.len());
                        }
                        continue;
                    }
                    rows.push(row);
                    rhs.push(rb);
                }
                let amat = ExactMatrix::from_fn(self.field, rows.len(), keep.len(), |i, j| rows[i][j].clone());
                AffineRelation::from_constraints(self.field, 0, keep.len(), amat, rhs)
            }
        }
    }

    /// Like [`project`], but reporting the result with the given type
    /// split instead of as a state.
    pub fn project_typed(&self, keep: &[usize], dom: usize, cod: usize) -> AffineRelation {
        assert_eq!(keep.len(), dom + cod);
        let mut p = self.project(keep);
        p.dom = dom;
        p.cod = cod;
        p
    }

    /// Relational composition: `self` then `rhs`.
    pub fn compose(&self, rhs: &AffineRelation) -> FieldResult<AffineRelation> {
        self.check_field(rhs)?;
        if self.cod != rhs.dom {
            return Err(FieldError::TypeMismatch(format!(
                "cannot compose {}->{} with {}->{}",
                self.dom, self.cod, rhs.dom, rhs.cod
            )));
        }
        if self.is_empty() || rhs.is_empty() {
            return Ok(AffineRelation::empty(self.field, self.dom, rhs.cod));
        }
        let (Body::Constraints { a: a1, b: b1 }, Body::Constraints { a: a2, b: b2 }) = (&self.body, &rhs.body) else {
            unreachable!()
        };
        // variables (u, y, v); stack both constraint systems, eliminate y
        let mid = self.cod;
        let total = self.dom + mid + rhs.cod;
        let rows1 = ExactMatrix::from_fn(self.field, a1.rows, total, |i, j| {
            if j < self.dom + mid {
                a1.get(i, j).clone()
            } else {
                self.field.zero()
            }
        });
        let rows2 = ExactMatrix::from_fn(self.field, a2.rows, total, |i, j| {
            if j >= self.dom {
                a2.get(i, j - self.dom).clone()
            } else {
                self.field.zero()
            }
        });
        let stacked = rows1.vstack(&rows2);
        let mut b = b1.clone();
        b.extend(b2.iter().cloned());
        let joint = AffineRelation::from_constraints(self.field, self.dom + mid, rhs.cod, stacked, b);
        let keep: Vec<usize> = (0..self.dom).chain(self.dom + mid..total).collect();
        Ok(joint.project_typed(&keep, self.dom, rhs.cod))
    }

    /// Monoidal product: coordinates of `rhs` appended after `self` in
    /// both domain and codomain.
    pub fn tensor(&self, rhs: &AffineRelation) -> FieldResult<AffineRelation> {
        self.check_field(rhs)?;
        let dom = self.dom + rhs.dom;
        let cod = self.cod + rhs.cod;
        if self.is_empty() || rhs.is_empty() {
            return Ok(AffineRelation::empty(self.field, dom, cod));
        }
        let (Body::Constraints { a: a1, b: b1 }, Body::Constraints { a: a2, b: b2 }) = (&self.body, &rhs.body) else {
            unreachable!()
        };
        let total = dom + cod;
        let place1 = |j: usize| if j < self.dom { j } else { dom + (j - self.dom) };
        let place2 = |j: usize| if j < rhs.dom { self.dom + j } else { dom + self.cod + (j - rhs.dom) };
        let mut a = ExactMatrix::zero(self.field, a1.rows + a2.rows, total);
        for i in 0..a1.rows {
            for j in 0..a1.cols {
                a.set(i, place1(j), a1.get(i, j).clone());
            }
        }
        for i in 0..a2.rows {
            for j in 0..a2.cols {
                a.set(a1.rows + i, place2(j), a2.get(i, j).clone());
            }
        }
        let mut b = b1.clone();
        b.extend(b2.iter().cloned());
        Ok(AffineRelation::from_constraints(self.field, dom, cod, a, b))
    }

    /// Plain relational converse: `(v, u)` for every `(u, v)`.
    pub fn converse(&self) -> AffineRelation {
        match &self.body {
            Body::Empty => AffineRelation::empty(self.field, self.cod, self.dom),
            Body::Constraints { a, b } => {
                let swapped = ExactMatrix::from_fn(self.field, a.rows, a.cols, |i, j| {
                    if j < self.cod {
                        a.get(i, self.dom + j).clone()
                    } else {
                        a.get(i, j - self.cod).clone()
                    }
                });
                AffineRelation::from_constraints(self.field, self.cod, self.dom, swapped, b.clone())
            }
        }
    }

    /// Projection onto the codomain coordinates, as a state `0 -> cod`.
    pub fn image(&self) -> AffineRelation {
        let keep: Vec<usize> = (self.dom..self.coords()).collect();
        self.project(&keep)
    }

    /// Exact equality of canonical forms.
    pub fn equal(&self, rhs: &AffineRelation) -> FieldResult<bool> {
        self.check_field(rhs)?;
        Ok(self.dom == rhs.dom && self.cod == rhs.cod && self.body == rhs.body)
    }
}

impl Serialize for AffineRelation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("AffineRelation", 5)?;
        st.serialize_field("field", &self.field.to_string())?;
        st.serialize_field("dom", &self.dom)?;
        st.serialize_field("cod", &self.cod)?;
        match &self.body {
            Body::Empty => {
                st.serialize_field("empty", &true)?;
            }
            Body::Constraints { a, b } => {
                let rows: Vec<Vec<String>> = (0..a.rows)
                    .map(|i| a.row(i).iter().map(|x| x.to_string()).collect())
                    .collect();
                let rhs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                st.serialize_field("constraints", &serde_json::json!({ "A": rows, "b": rhs }))?;
            }
        }
        st.end()
    }
}

// ---------------------------------------------------------------------
// brute-force enumeration oracle (prime fields only, desk scale)
// ---------------------------------------------------------------------

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration budget exceeded: {0} points requested, budget {1}")]
    BudgetExceeded(u128, u128),
    #[error("oracle requires a prime field")]
    NotPrimeField,
}

/// All points of `K^n` for `K = F_p`, in lexicographic order.
pub fn enumerate_points(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = (p as u128).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut pt = vec![0u64; n];
        for slot in (0..n).rev() {
            pt[slot] = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        pt
    })
}

pub fn to_scalars(p: u64, pt: &[u64]) -> Vec<Scalar> {
    pt.iter().map(|&v| Scalar::Fp { val: v % p, p }).collect()
}

/// Exhaustively enumerate the points satisfying a membership predicate
/// over `F_p^(dom+cod)` and return them along with the affine relation
/// reconstructed from them (or `Empty`).
pub fn brute_force_relation(
    field: FieldKind,
    dom: usize,
    cod: usize,
    budget: u128,
    pred: impl Fn(&[Scalar]) -> bool,
) -> Result<(AffineRelation, Vec<Vec<u64>>), OracleError> {
    let FieldKind::Fp(p) = field else {
        return Err(OracleError::NotPrimeField);
    };
    let total = (p as u128).pow((dom + cod) as u32);
    if total > budget {
        return Err(OracleError::BudgetExceeded(total, budget));
    }
    let mut points = Vec::new();
    for pt in enumerate_points(p, dom + cod) {
        if pred(&to_scalars(p, &pt)) {
            points.push(pt);
        }
    }
    let rel = relation_from_points(field, dom, cod, &points);
    Ok((rel, points))
}

/// Reconstruct the affine relation spanned by an explicit point set; the
/// set must actually be an affine subspace for the result to be faithful.
pub fn relation_from_points(field: FieldKind, dom: usize, cod: usize, points: &[Vec<u64>]) -> AffineRelation {
    let FieldKind::Fp(p) = field else {
        panic!("relation_from_points requires a prime field")
    };
    if points.is_empty() {
        return AffineRelation::empty(field, dom, cod);
    }
    let offset = to_scalars(p, &points[0]);
    let diffs: Vec<Vec<Scalar>> = points[1..]
        .iter()
        .map(|pt| {
            to_scalars(p, pt)
                .iter()
                .zip(&offset)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    // reduce the spanning set to an actual basis
    let dmat = ExactMatrix::from_fn(field, diffs.len(), dom + cod, |i, j| diffs[i][j].clone());
    let r = matrix::rref(&dmat);
    let basis: Vec<Vec<Scalar>> = (0..r.pivots.len()).map(|i| r.rref.row(i).to_vec()).collect();
    let span = SpanForm { offset, basis };
    AffineRelation::from_span(field, dom, cod, &span)
}

/// Enumerate the member points of a relation over a prime field.
pub fn relation_points(rel: &AffineRelation) -> Vec<Vec<u64>> {
    let FieldKind::Fp(p) = rel.field else {
        panic!("relation_points requires a prime field")
    };
    enumerate_points(p, rel.coords())
        .filter(|pt| rel.contains(&to_scalars(p, pt)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    const F3: FieldKind = FieldKind::Fp(3);

    fn random_relation(rng: &mut ChaCha8Rng, field: FieldKind, dom: usize, cod: usize) -> AffineRelation {
        let n = dom + cod;
        let rows = rng.gen_range(0..=n);
        let FieldKind::Fp(p) = field else { panic!() };
        let a = ExactMatrix::from_fn(field, rows, n, |_, _| field.from_i64(rng.gen_range(0..p) as i64));
        let b: Vec<Scalar> = (0..rows).map(|_| field.from_i64(rng.gen_range(0..p) as i64)).collect();
        AffineRelation::from_constraints(field, dom, cod, a, b)
    }

    fn points_set(rel: &AffineRelation) -> BTreeSet<Vec<u64>> {
        relation_points(rel).into_iter().collect()
    }

    #[test]
    fn graph_composition_is_functorial() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..25 {
            let f5 = FieldKind::Fp(5);
            let a = ExactMatrix::from_fn(f5, 2, 2, |_, _| f5.from_i64(rng.gen_range(0..5)));
            let b = ExactMatrix::from_fn(f5, 2, 2, |_, _| f5.from_i64(rng.gen_range(0..5)));
            let zero = vec![f5.zero(); 2];
            let ga = AffineRelation::graph(&a, &zero);
            let gb = AffineRelation::graph(&b, &zero);
            let gba = AffineRelation::graph(&b.mul(&a), &zero);
            assert_eq!(ga.compose(&gb).unwrap(), gba);
        }
    }

    #[test]
    fn empty_absorbs_composition() {
        let r = AffineRelation::identity(F3, 2);
        let e = AffineRelation::empty(F3, 2, 2);
        assert!(e.compose(&r).unwrap().is_empty());
        assert!(r.compose(&e).unwrap().is_empty());
    }

    #[test]
    fn compose_matches_enumeration_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..60 {
            let r = random_relation(&mut rng, F3, 1, 1);
            let s = random_relation(&mut rng, F3, 1, 1);
            let composed = r.compose(&s).unwrap();
            // oracle: (u, v) related iff some witness y exists
            let (oracle, _) = brute_force_relation(F3, 1, 1, 1 << 20, |pt| {
                (0..3).any(|y| {
                    let ys = Scalar::Fp { val: y, p: 3 };
                    r.contains(&[pt[0].clone(), ys.clone()]) && s.contains(&[ys, pt[1].clone()])
                })
            })
            .unwrap();
            assert_eq!(points_set(&composed), points_set(&oracle));
        }
    }

    #[test]
    fn tensor_unit_and_membership() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let unit = AffineRelation::full(F3, 0, 0);
        for _ in 0..30 {
            let r = random_relation(&mut rng, F3, 1, 1);
            assert_eq!(r.tensor(&unit).unwrap(), r);
            let s = random_relation(&mut rng, F3, 1, 1);
            let t = r.tensor(&s).unwrap();
            for pt in enumerate_points(3, 4) {
                let sc = to_scalars(3, &pt);
                let in_t = t.contains(&sc);
                let in_parts = r.contains(&[sc[0].clone(), sc[2].clone()]) && s.contains(&[sc[1].clone(), sc[3].clone()]);
                assert_eq!(in_t, in_parts);
            }
        }
    }

    #[test]
    fn identity_tensor_identity() {
        let id1 = AffineRelation::identity(F3, 1);
        let id2 = AffineRelation::identity(F3, 2);
        assert_eq!(id1.tensor(&id1).unwrap(), id2);
    }

    #[test]
    fn converse_is_involution_and_matches_swaps() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..30 {
            let r = random_relation(&mut rng, F3, 2, 1);
            assert_eq!(r.converse().converse(), r);
            let c = r.converse();
            for pt in enumerate_points(3, 3) {
                let sc = to_scalars(3, &pt);
                let swapped = vec![sc[2].clone(), sc[0].clone(), sc[1].clone()];
                assert_eq!(r.contains(&sc), c.contains(&swapped));
            }
        }
    }

    #[test]
    fn projection_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for _ in 0..40 {
            let r = random_relation(&mut rng, F3, 2, 2);
            let keep = [1usize, 3];
            let p = r.project(&keep);
            let expected: BTreeSet<Vec<u64>> = relation_points(&r)
                .into_iter()
                .map(|pt| vec![pt[1], pt[3]])
                .collect();
            assert_eq!(points_set(&p), expected);
        }
    }

    #[test]
    fn project_all_coordinates_is_identity_on_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        for _ in 0..20 {
            let r = random_relation(&mut rng, F3, 1, 2);
            let keep: Vec<usize> = (0..3).collect();
            let p = r.project_typed(&keep, 1, 2);
            assert_eq!(p, r);
        }
        let e = AffineRelation::empty(F3, 1, 1);
        assert!(e.project(&[0]).is_empty());
    }

    #[test]
    fn image_of_identity_is_full() {
        let id = AffineRelation::identity(F3, 2);
        assert_eq!(id.image(), AffineRelation::full(F3, 0, 2));
        assert!(AffineRelation::empty(F3, 1, 1).image().is_empty());
    }

    #[test]
    fn image_of_graph_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        for _ in 0..20 {
            let a = ExactMatrix::from_fn(F3, 2, 2, |_, _| F3.from_i64(rng.gen_range(0..3)));
            let t: Vec<Scalar> = (0..2).map(|_| F3.from_i64(rng.gen_range(0..3))).collect();
            let g = AffineRelation::graph(&a, &t);
            let img = g.image();
            let expected: BTreeSet<Vec<u64>> = relation_points(&g).into_iter().map(|pt| vec![pt[2], pt[3]]).collect();
            assert_eq!(points_set(&img), expected);
        }
    }

    #[test]
    fn equality_is_presentation_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        let f5 = FieldKind::Fp(5);
        for _ in 0..30 {
            let rows = 2;
            let a = ExactMatrix::from_fn(f5, rows, 4, |_, _| f5.from_i64(rng.gen_range(0..5)));
            let b: Vec<Scalar> = (0..rows).map(|_| f5.from_i64(rng.gen_range(0..5))).collect();
            let r1 = AffineRelation::from_constraints(f5, 2, 2, a.clone(), b.clone());
            // apply a random invertible row mix to the same system
            let mix = loop {
                let m = ExactMatrix::from_fn(f5, rows, rows, |_, _| f5.from_i64(rng.gen_range(0..5)));
                if matrix::inverse(&m).is_some() {
                    break m;
                }
            };
            let a2 = mix.mul(&a);
            let b2 = mix.mul_vec(&b);
            let r2 = AffineRelation::from_constraints(f5, 2, 2, a2, b2);
            assert!(r1.equal(&r2).unwrap());
            assert_eq!(serde_json::to_string(&r1).unwrap(), serde_json::to_string(&r2).unwrap());
        }
    }

    #[test]
    fn full_plane_differs_from_axis() {
        // 0 -> 1 relations over Q: the whole line vs the origin-only point
        let q = FieldKind::Q;
        let full = AffineRelation::full(q, 0, 1);
        let mut a = ExactMatrix::zero(q, 1, 1);
        a.set(0, 0, q.one());
        let axis = AffineRelation::from_constraints(q, 0, 1, a, vec![q.zero()]);
        assert!(!full.equal(&axis).unwrap());
    }

    #[test]
    fn composition_associative_and_unital() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..40 {
            let r = random_relation(&mut rng, F3, 1, 1);
            let s = random_relation(&mut rng, F3, 1, 1);
            let t = random_relation(&mut rng, F3, 1, 1);
            let left = r.compose(&s).unwrap().compose(&t).unwrap();
            let right = r.compose(&s.compose(&t).unwrap()).unwrap();
            assert_eq!(left, right);
            let id = AffineRelation::identity(F3, 1);
            assert_eq!(id.compose(&r).unwrap(), r);
            assert_eq!(r.compose(&id).unwrap(), r);
        }
    }

    #[test]
    fn converse_distributes_over_tensor() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        for _ in 0..20 {
            let r = random_relation(&mut rng, F3, 1, 1);
            let s = random_relation(&mut rng, F3, 1, 1);
            let lhs = r.tensor(&s).unwrap().converse();
            let rhs = r.converse().tensor(&s.converse()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn oracle_examples() {
        // identity on one coordinate pair over F_3: 9 points
        let id = AffineRelation::identity(F3, 2);
        assert_eq!(relation_points(&id).len(), 9);
        // empty: no points
        assert!(relation_points(&AffineRelation::empty(F3, 1, 1)).is_empty());
        // budget
        let r = brute_force_relation(F3, 10, 10, 1000, |_| true);
        assert!(matches!(r, Err(OracleError::BudgetExceeded(_, _))));
    }

    #[test]
    fn span_form_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let r = random_relation(&mut rng, F3, 2, 1);
            if let Some(span) = r.span_form() {
                let back = AffineRelation::from_span(F3, 2, 1, &span);
                assert_eq!(back, r);
            }
        }
    }
}
