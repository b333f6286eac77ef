//! Level-truncated Fock space with exact sparse operator matrices.
//!
//! States are the unnormalized monomials `Π c_i*^{n_i} |0⟩`, so `c* |n⟩ = |n+1⟩`
//! and `c |n⟩ = n |n−1⟩`; all matrix entries stay rational. The squared norm
//! of a basis state is `Π n_i!`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bilocal::DivisionAlgebra;
use crate::field::{factorial, Conjugate, Qi, Q};
use crate::linalg::Matrix;
use crate::oscrep::GeneratorSet;
use crate::report::Report;
use crate::weylalg::{span_dim, Ladder, ModeId, SpanReducer, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FockError {
    /// The operator involves a mode outside the truncated space.
    ModeMismatch(ModeId),
    /// A Cartan element fails to act diagonally on the monomial basis.
    NotDiagonal(String),
    /// Requested space is larger than the configured cap.
    TooLarge { states: u128, cap: u128 },
}

impl fmt::Display for FockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FockError::ModeMismatch(m) => write!(f, "mode {} is not part of the Fock space", m),
            FockError::NotDiagonal(m) => write!(f, "Cartan action is not diagonal: {}", m),
            FockError::TooLarge { states, cap } => write!(f, "{} states exceed the cap of {}", states, cap),
        }
    }
}

/// Number of occupation vectors of `k` modes with total occupation `<= cutoff`.
pub fn basis_size(k: usize, cutoff: u32) -> u128 {
    // C(k + L, L)
    let mut acc: u128 = 1;
    for j in 1..=cutoff as u128 {
        acc = acc * (k as u128 + j) / j;
    }
    acc
}

#[derive(Clone, Debug)]
pub struct TruncatedFock {
    modes: Vec<ModeId>,
    cutoff: u32,
    basis: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
    level_start: Vec<usize>,
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

impl TruncatedFock {
    /// Graded lexicographic basis: by total occupation, then descending
    /// lexicographic order of the occupation vector.
    pub fn new(modes: Vec<ModeId>, cutoff: u32) -> Self {
        let k = modes.len();
        let mut basis = Vec::new();
        let mut level_start = Vec::new();
        for level in 0..=cutoff {
            level_start.push(basis.len());
            if k == 0 {
                if level == 0 {
                    basis.push(Vec::new());
                }
                continue;
            }
            compositions(level, k, &mut Vec::with_capacity(k), &mut basis);
        }
        level_start.push(basis.len());
        let index = basis.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        TruncatedFock { modes, cutoff, basis, index, level_start }
    }

    pub fn with_cap(modes: Vec<ModeId>, cutoff: u32, cap: u128) -> Result<Self, FockError> {
        let states = basis_size(modes.len(), cutoff);
        if states > cap {
            return Err(FockError::TooLarge { states, cap });
        }
        Ok(Self::new(modes, cutoff))
    }

    pub fn modes(&self) -> &[ModeId] {
        &self.modes
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn state(&self, i: usize) -> &[u32] {
        &self.basis[i]
    }

    pub fn level(&self, i: usize) -> u32 {
        self.basis[i].iter().sum()
    }

    pub fn index_of(&self, occ: &[u32]) -> Option<usize> {
        self.index.get(occ).copied()
    }

    /// Indices of the states with total occupation exactly `level`.
    pub fn level_range(&self, level: u32) -> core::ops::Range<usize> {
        if level > self.cutoff {
            return 0..0;
        }
        self.level_start[level as usize]..self.level_start[level as usize + 1]
    }

    /// Indices of the states with total occupation `<= level`.
    pub fn up_to(&self, level: u32) -> core::ops::Range<usize> {
        0..self.level_start[(level.min(self.cutoff) + 1) as usize]
    }

    /// `⟨n|n⟩ = Π n_i!`.
    pub fn norm_weight(&self, i: usize) -> BigInt {
        self.basis[i].iter().fold(BigInt::one(), |acc, &n| acc * factorial(n))
    }

    fn mode_pos(&self, m: ModeId) -> Option<usize> {
        self.modes.iter().position(|&x| x == m)
    }

    /// Index of `Π c*^{n}|0⟩` for the given occupations of named modes.
    pub fn state_of(&self, occ: &[(ModeId, u32)]) -> Option<usize> {
        let mut v = vec![0u32; self.modes.len()];
        for &(m, n) in occ {
            v[self.mode_pos(m)?] += n;
        }
        self.index_of(&v)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Qi> {
        let mut v = vec![Qi::zero(); self.dim()];
        v[i] = Qi::one();
        v
    }
}

/// Exact sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    dim: usize,
    cols: Vec<BTreeMap<usize, Qi>>,
    /// Largest level increase of any term of the source element.
    pub raise: i64,
    /// Some image left the truncation and was dropped.
    pub overflow: bool,
}

impl SparseOperator {
    pub fn zero(dim: usize) -> Self {
        SparseOperator { dim, cols: vec![BTreeMap::new(); dim], raise: 0, overflow: false }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Qi {
        self.cols[c].get(&r).cloned().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, Qi> {
        &self.cols[c]
    }

    fn add_entry(&mut self, r: usize, c: usize, v: Qi) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.cols[c];
        let cur = col.remove(&r).unwrap_or_default() + v;
        if !cur.is_zero() {
            col.insert(r, cur);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Qi)> {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn apply(&self, v: &[Qi]) -> Vec<Qi> {
        let mut out = vec![Qi::zero(); self.dim];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (&r, a) in &self.cols[c] {
                out[r] = &out[r] + &(a * x);
            }
        }
        out
    }

    pub fn mul(&self, o: &SparseOperator) -> SparseOperator {
        let mut out = SparseOperator::zero(self.dim);
        out.raise = self.raise + o.raise;
        out.overflow = self.overflow || o.overflow;
        for (c, col) in o.cols.iter().enumerate() {
            for (&k, b) in col {
                for (&r, a) in &self.cols[k] {
                    out.add_entry(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &SparseOperator) -> SparseOperator {
        let mut out = self.clone();
        out.raise = self.raise.max(o.raise);
        out.overflow |= o.overflow;
        for (r, c, v) in o.entries() {
            out.add_entry(r, c, v.clone());
        }
        out
    }

    pub fn scale(&self, k: &Qi) -> SparseOperator {
        let mut out = SparseOperator::zero(self.dim);
        out.raise = self.raise;
        out.overflow = self.overflow;
        for (r, c, v) in self.entries() {
            out.add_entry(r, c, v * k);
        }
        out
    }

    pub fn sub(&self, o: &SparseOperator) -> SparseOperator {
        self.add(&o.scale(&Qi::int(-1)))
    }

    pub fn commutator(&self, o: &SparseOperator) -> SparseOperator {
        self.mul(o).sub(&o.mul(self))
    }

    /// Keeps only the columns of states with level `<= max_level`.
    pub fn restrict(&self, fock: &TruncatedFock, max_level: i64) -> SparseOperator {
        let mut out = self.clone();
        for c in 0..self.dim {
            if (fock.level(c) as i64) > max_level {
                out.cols[c].clear();
            }
        }
        out
    }

    pub fn to_dense(&self) -> Matrix<Qi> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (r, c, v) in self.entries() {
            m.set(r, c, v.clone());
        }
        m
    }
}

/// Exact action of `w` on every basis state; images above the cutoff are
/// dropped and flagged.
pub fn operator_matrix(w: &WeylElement, fock: &TruncatedFock) -> Result<SparseOperator, FockError> {
    let mut out = SparseOperator::zero(fock.dim());
    out.raise = w.max_level_raise();
    let mut ops: Vec<(Vec<(usize, u32, u32)>, Qi)> = Vec::new();
    for (m, c) in w.terms() {
        let mut v = Vec::new();
        for &(id, p, q) in m.powers() {
            v.push((fock.mode_pos(id).ok_or(FockError::ModeMismatch(id))?, p, q));
        }
        ops.push((v, c.clone()));
    }
    for col in 0..fock.dim() {
        let occ = fock.state(col);
        'term: for (powers, c) in &ops {
            let mut new = occ.to_vec();
            let mut coef = BigInt::one();
            for &(pos, p, q) in powers {
                let n = new[pos];
                if n < q {
                    continue 'term;
                }
                for k in 0..q {
                    coef *= BigInt::from(n - k);
                }
                new[pos] = n - q + p;
            }
            match fock.index_of(&new) {
                Some(row) => out.add_entry(row, col, c.scale(&Q::from_integer(coef))),
                None => out.overflow = true,
            }
        }
    }
    Ok(out)
}

/// `w |v⟩` for a dense state vector.
pub fn apply(w: &WeylElement, fock: &TruncatedFock, v: &[Qi]) -> Result<Vec<Qi>, FockError> {
    Ok(operator_matrix(w, fock)?.apply(v))
}

/// Matrices of `x`, `y` and `[x, y]`: checks `M([x,y]) = [M(x), M(y)]` on the
/// states where no intermediate image can leave the truncation.
pub fn homomorphism_defect(x: &WeylElement, y: &WeylElement, fock: &TruncatedFock) -> Result<Option<String>, FockError> {
    let mx = operator_matrix(x, fock)?;
    let my = operator_matrix(y, fock)?;
    let mxy = operator_matrix(&x.commutator(y), fock)?;
    let safe = fock.cutoff() as i64 - mx.raise - my.raise;
    if safe < 0 {
        return Ok(None);
    }
    let lhs = mxy.restrict(fock, safe);
    let rhs = mx.commutator(&my).restrict(fock, safe);
    let d = lhs.sub(&rhs);
    Ok(if d.is_zero() { None } else { Some(format!("{} differing entries", d.nnz())) })
}

/// Checks `M(x*) = W⁻¹ ᵗM̄(x) W` with `W = diag(Π n_i!)` on the safe range.
pub fn adjoint_defect(x: &WeylElement, fock: &TruncatedFock) -> Result<bool, FockError> {
    let m = operator_matrix(x, fock)?;
    let ma = operator_matrix(&x.adjoint(), fock)?;
    let safe = fock.cutoff() as i64 - m.raise.max(ma.raise);
    for (r, c, v) in m.entries() {
        // entry (r, c) of M(x) matches entry (c, r) of M(x*) up to weights
        if (fock.level(r) as i64) > safe || (fock.level(c) as i64) > safe {
            continue;
        }
        let w = Q::new(fock.norm_weight(r), fock.norm_weight(c));
        if ma.get(c, r) != v.conj().scale(&w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lowest-weight data of one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityRow {
    pub level: u32,
    /// Eigenvalues of the algebra's Cartan elements on the lowest-weight vector.
    pub weight: Vec<i64>,
    /// Eigenvalues of the gauge Cartan elements on the gauge-highest vector.
    pub gauge_label: Vec<i64>,
    pub gauge_dim: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub rows: Vec<MultiplicityRow>,
    /// Dimension of the joint kernel of all lowering operators, per level.
    pub lowest_weight_dims: BTreeMap<u32, usize>,
}

impl MultiplicityTable {
    /// `dim(lowest-weight space at ℓ) = Σ_rows multiplicity · gauge_dim`.
    pub fn bookkeeping_holds(&self) -> bool {
        self.lowest_weight_dims.iter().all(|(&l, &d)| {
            let s: usize = self.rows.iter().filter(|r| r.level == l).map(|r| r.multiplicity * r.gauge_dim).sum();
            s == d
        })
    }

    /// Each distinct lowest weight occurs with a single gauge irrep, once.
    pub fn one_to_one(&self) -> bool {
        let mut seen: BTreeMap<(u32, Vec<i64>), usize> = BTreeMap::new();
        for r in &self.rows {
            *seen.entry((r.level, r.weight.clone())).or_insert(0) += r.multiplicity;
        }
        seen.values().all(|&m| m == 1)
    }

    pub fn rows_at(&self, level: u32) -> impl Iterator<Item = &MultiplicityRow> {
        self.rows.iter().filter(move |r| r.level == level)
    }
}

fn diagonal_value(op: &SparseOperator, i: usize) -> Result<i64, FockError> {
    let col = op.column(i);
    let bad = || FockError::NotDiagonal(format!("state {}", i));
    if col.keys().any(|&r| r != i) {
        return Err(bad());
    }
    let v = col.get(&i).cloned().unwrap_or_default();
    if !v.is_real() || !v.re.is_integer() {
        return Err(bad());
    }
    i64::try_from(v.re.to_integer()).map_err(|_| bad())
}

/// Kernel of the stacked operators restricted to the given columns, as
/// dense vectors over the full space.
fn joint_kernel(ops: &[SparseOperator], cols: &[usize], dim: usize) -> Vec<Vec<Qi>> {
    let mut row_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, Qi)> = Vec::new();
    for (k, op) in ops.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            for (&r, v) in op.column(c) {
                let next = row_index.len();
                let ri = *row_index.entry((k, r)).or_insert(next);
                entries.push((ri, j, v.clone()));
            }
        }
    }
    let mut m = Matrix::zeros(row_index.len().max(1), cols.len());
    for (r, c, v) in entries {
        m.set(r, c, v);
    }
    m.kernel()
        .into_iter()
        .map(|k| {
            let mut v = vec![Qi::zero(); dim];
            for (j, &c) in cols.iter().enumerate() {
                v[c] = k[j].clone();
            }
            v
        })
        .collect()
}

fn vec_rank(vs: &[Vec<Qi>]) -> usize {
    let nz: Vec<Vec<Qi>> = vs.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    crate::linalg::span_rank(&nz)
}

/// Dimension of the module generated from `v` by the gauge lowering operators.
fn gauge_orbit_dim(v: &[Qi], lowering: &[SparseOperator]) -> usize {
    let mut span: Vec<Vec<Qi>> = vec![v.to_vec()];
    let mut frontier = vec![v.to_vec()];
    while let Some(x) = frontier.pop() {
        for f in lowering {
            let y = f.apply(&x);
            if y.iter().all(Zero::is_zero) {
                continue;
            }
            let mut trial = span.clone();
            trial.push(y.clone());
            if vec_rank(&trial) > span.len() {
                span.push(y.clone());
                frontier.push(y);
            }
        }
    }
    span.len()
}

/// Lowest-weight vectors of `alg` level by level, organized by the gauge
/// algebra (`gauge.e` raise, `gauge.f` lower, `gauge.h` Cartan).
pub fn joint_weight_decomposition(
    alg: &GeneratorSet,
    gauge: &GeneratorSet,
    fock: &TruncatedFock,
    max_level: u32,
) -> Result<MultiplicityTable, FockError> {
    let mat = |ws: &[WeylElement]| ws.iter().map(|w| operator_matrix(w, fock)).collect::<Result<Vec<_>, _>>();
    let f_ops = mat(&alg.f)?;
    let h_ops = mat(&alg.h)?;
    let ge = mat(&gauge.e)?;
    let gf = mat(&gauge.f)?;
    let gh = mat(&gauge.h)?;
    let mut table = MultiplicityTable::default();
    for level in 0..=max_level.min(fock.cutoff()) {
        // group the monomials of this level by (weight, gauge weight)
        let mut groups: BTreeMap<(Vec<i64>, Vec<i64>), Vec<usize>> = BTreeMap::new();
        for i in fock.level_range(level) {
            let w = h_ops.iter().map(|h| diagonal_value(h, i)).collect::<Result<Vec<_>, _>>()?;
            let g = gh.iter().map(|h| diagonal_value(h, i)).collect::<Result<Vec<_>, _>>()?;
            groups.entry((w, g)).or_default().push(i);
        }
        let mut lw: BTreeMap<(Vec<i64>, Vec<i64>), Vec<Vec<Qi>>> = BTreeMap::new();
        let mut total = 0;
        for (key, cols) in &groups {
            let k = joint_kernel(&f_ops, cols, fock.dim());
            total += k.len();
            if !k.is_empty() {
                lw.insert(key.clone(), k);
            }
        }
        table.lowest_weight_dims.insert(level, total);
        for ((weight, glabel), vecs) in &lw {
            // gauge-highest vectors inside this lowest-weight space
            let images: Vec<Vec<Vec<Qi>>> = vecs.iter().map(|v| ge.iter().map(|e| e.apply(v)).collect()).collect();
            let n = vecs.len();
            let mut rows: Vec<Vec<Qi>> = Vec::new();
            for (k, _) in ge.iter().enumerate() {
                for r in 0..fock.dim() {
                    rows.push((0..n).map(|j| images[j][k][r].clone()).collect());
                }
            }
            let coeffs = if rows.is_empty() {
                (0..n).map(|j| (0..n).map(|i| if i == j { Qi::one() } else { Qi::zero() }).collect()).collect()
            } else {
                Matrix::from_rows(rows).kernel()
            };
            if coeffs.is_empty() {
                continue;
            }
            let hv: Vec<Qi> = (0..fock.dim()).map(|r| vecs.iter().zip(&coeffs[0]).fold(Qi::zero(), |acc, (v, c)| acc + &v[r] * c)).collect();
            table.rows.push(MultiplicityRow {
                level,
                weight: weight.clone(),
                gauge_label: glabel.clone(),
                gauge_dim: gauge_orbit_dim(&hv, &gf),
                multiplicity: coeffs.len(),
            });
        }
    }
    Ok(table)
}

/// Histogram of the eigenvalues of `h = Σ a*a − Σ b*b` on the states of
/// total occupation exactly `level` over `a_1, a_2, b_1, b_2`.
pub fn helicity_spectrum(level: u32) -> Result<BTreeMap<i64, usize>, FockError> {
    let modes = vec![ModeId::A(1), ModeId::A(2), ModeId::B(1), ModeId::B(2)];
    let fock = TruncatedFock::new(modes, level);
    let h = operator_matrix(&crate::oscrep::charge(2), &fock)?;
    let mut out = BTreeMap::new();
    for i in fock.level_range(level) {
        *out.entry(diagonal_value(&h, i)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// `c_{k,r}` for `k = 1..K`, `r = 1..flavors`.
fn flavor_modes(k: u16, flavors: u16) -> Vec<ModeId> {
    let mut v = Vec::new();
    for kk in 1..=k {
        for r in 1..=flavors {
            v.push(ModeId::Flavor(kk, r));
        }
    }
    v
}

/// `ξ_{α,r}`: annihilators for `α < K`, creators for `α ≥ K`.
fn xi(k: u16, alpha: usize, r: u16) -> Ladder {
    let kk = k as usize;
    if alpha < kk {
        Ladder::ann(ModeId::Flavor(alpha as u16 + 1, r))
    } else {
        Ladder::cre(ModeId::Flavor((alpha - kk) as u16 + 1, r))
    }
}

/// `Σ X_{αβ} M_{rs} :ξ_{αr} ξ_{βs}:` over `K` modes.
pub fn flavor_bilinear(k: u16, x: &Matrix<Qi>, m: &Matrix<Q>) -> WeylElement {
    let mut out = WeylElement::zero();
    for al in 0..x.rows() {
        for be in 0..x.cols() {
            let xv = x.get(al, be);
            if xv.is_zero() {
                continue;
            }
            for r in 0..m.rows() {
                for s in 0..m.cols() {
                    let mv = m.get(r, s);
                    if mv.is_zero() {
                        continue;
                    }
                    let p = WeylElement::word(&[xi(k, al, r as u16 + 1), xi(k, be, s as u16 + 1)]).without_scalar();
                    out = out + p.scale(&xv.scale(mv));
                }
            }
        }
    }
    out
}

/// Gauge generator `Σ_k Σ_{rs} A_rs c*_{k,r} c_{k,s}` for an antisymmetric real `A`.
pub fn gauge_generator(k: u16, a: &Matrix<Q>) -> WeylElement {
    let mut out = WeylElement::zero();
    for kk in 1..=k {
        for r in 0..a.rows() {
            for s in 0..a.cols() {
                let v = a.get(r, s);
                if v.is_zero() {
                    continue;
                }
                let p = WeylElement::word(&[Ladder::cre(ModeId::Flavor(kk, r as u16 + 1)), Ladder::ann(ModeId::Flavor(kk, s as u16 + 1))]);
                out = out + p.scale_q(v);
            }
        }
    }
    out
}

/// Outcome of the finite closure check of the flavor bilinears.
#[derive(Clone, Debug)]
pub struct ClosureOutcome {
    pub report: Report,
    /// Ratio of central terms at `N` to those at `N = 1`, if constant.
    pub central_charge: Option<Q>,
    pub gauge_dim: usize,
}

/// Closure of the `N`-flavor bilinears over `K` modes onto bilinears plus a
/// central term, with central charge `N`, and gauge invariance under the
/// antisymmetric commutant of `𝓜 = F ⊗ 1_N`. Fock-level gauge invariance is
/// checked when `fock_level > 0`.
pub fn truncated_closure_check(family: DivisionAlgebra, k: u16, n: u16, fock_level: u32) -> ClosureOutcome {
    let mut report = Report::new(format!("bilinear closure for {} with K={}, N={}", family.label(), k, n));
    let ms_n = family.flavor_algebra(n as usize);
    let ms_1 = family.flavor_algebra(1);
    let size = 2 * k as usize;
    let mut xs = Vec::new();
    for i in 0..size {
        for j in 0..size {
            xs.push(Matrix::<Qi>::unit(size, i, j));
        }
    }
    let span_n: Vec<WeylElement> = xs.iter().flat_map(|x| ms_n.iter().map(move |m| flavor_bilinear(k, x, m))).collect();
    let span_1: Vec<WeylElement> = xs.iter().flat_map(|x| ms_1.iter().map(move |m| flavor_bilinear(k, x, m))).collect();
    let reducer = SpanReducer::new(&span_n);
    let mut ratio: Option<Q> = None;
    let mut ratio_ok = true;
    let mut closure_fail = 0usize;
    for i in 0..span_n.len() {
        for j in i..span_n.len() {
            let c = span_n[i].commutator(&span_n[j]);
            if !reducer.contains(&c.without_scalar()) {
                closure_fail += 1;
            }
            let c1 = span_1[i].commutator(&span_1[j]).scalar_part();
            let cn = c.scalar_part();
            if c1.is_zero() {
                if !cn.is_zero() {
                    ratio_ok = false;
                }
                continue;
            }
            let r = cn.re.clone() / c1.re.clone();
            if !cn.im.is_zero() || !c1.im.is_zero() {
                ratio_ok = false;
            }
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev != r => ratio_ok = false,
                _ => {}
            }
        }
    }
    report
        .record_bool("closure", "bilinears close up to a central term", closure_fail == 0, || format!("{} commutators leave the span", closure_fail));
    let nq = Q::from_integer(n.into());
    let central_charge = if ratio_ok { ratio } else { None };
    report.record_bool("central charge", "central charge equals N", central_charge.as_ref() == Some(&nq), || format!("ratio {:?}", central_charge));

    let gauge = family.gauge_algebra(n as usize);
    let gens: Vec<WeylElement> = gauge.iter().map(|a| gauge_generator(k, a)).collect();
    let gauge_dim = span_dim(&gens);
    report.record_bool("gauge dimension", "gauge group U(N,F)", gauge_dim == family.gauge_dim(n as usize), || {
        format!("found {}, expected {}", gauge_dim, family.gauge_dim(n as usize))
    });
    let mut inv_fail = Vec::new();
    for g in &gens {
        for (idx, b) in span_n.iter().enumerate() {
            if !g.commutator(b).is_zero() {
                inv_fail.push(idx);
            }
        }
    }
    report.record_bool("gauge invariance", "bilinears are gauge invariant", inv_fail.is_empty(), || {
        format!("{} bilinears not invariant", inv_fail.len())
    });
    if fock_level > 0 {
        let fock = TruncatedFock::new(flavor_modes(k, family.dim() as u16 * n), fock_level);
        let mut bad = 0usize;
        for g in &gens {
            let mg = operator_matrix(g, &fock).expect("modes match");
            for b in &span_n {
                let mb = operator_matrix(b, &fock).expect("modes match");
                let safe = fock_level as i64 - mb.raise;
                if !mg.commutator(&mb).restrict(&fock, safe).is_zero() {
                    bad += 1;
                }
            }
        }
        report
            .record_bool("gauge invariance (Fock)", "bilinears are gauge invariant", bad == 0, || format!("{} operator pairs fail to commute", bad));
    }
    ClosureOutcome { report, central_charge, gauge_dim }
}

/// `E12 E34 + E14 E23 − E13 E24` assembled from sparse operator matrices of
/// the `so*(8)` generators, on the states where no product leaves the cutoff;
/// the version with `E13` replaced by `E14` is a negative control.
pub fn nilpotent_cone_matrix_check(cutoff: u32) -> Result<Report, FockError> {
    use crate::oscrep::e_ij;
    let modes: Vec<ModeId> = (1..=4).map(ModeId::A).chain((1..=4).map(ModeId::B)).collect();
    let fock = TruncatedFock::new(modes, cutoff);
    let m = |i, j| operator_matrix(&e_ij(i, j), &fock);
    let (m12, m34, m14, m23, m13, m24) = (m(1, 2)?, m(3, 4)?, m(1, 4)?, m(2, 3)?, m(1, 3)?, m(2, 4)?);
    let safe = cutoff as i64 - 4;
    let mut r = Report::new(format!("nilpotent-cone relation on the Fock space, cutoff {}", cutoff));
    let lhs = m12.mul(&m34).add(&m14.mul(&m23)).sub(&m13.mul(&m24)).restrict(&fock, safe);
    r.record_bool("matrix image", "nilpotent-cone relation", safe >= 0 && lhs.is_zero(), || {
        if safe < 0 {
            "cutoff below 4".into()
        } else {
            format!("{} nonzero entries", lhs.nnz())
        }
    });
    let bad = m12.mul(&m34).add(&m14.mul(&m23)).sub(&m14.mul(&m24)).restrict(&fock, safe);
    r.record_negative(
        "corrupted matrix image",
        "nilpotent-cone relation",
        if bad.is_zero() { None } else { Some(format!("{} nonzero entries", bad.nnz())) },
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscrep::{so_star_generators, sp2_generator_set};
    use crate::weylalg::{ann, cre, pair};

    fn c(i: u16) -> ModeId {
        ModeId::C(i)
    }

    #[test]
    fn basis_enumeration() {
        let f = TruncatedFock::new(vec![c(1)], 3);
        assert_eq!(f.dim(), 4);
        let w: Vec<BigInt> = (0..4).map(|i| f.norm_weight(i)).collect();
        assert_eq!(w, [1, 1, 2, 6].map(BigInt::from));
        assert_eq!(TruncatedFock::new(vec![c(1), c(2)], 2).dim(), 6);
        let m8: Vec<ModeId> = (1..=8).map(c).collect();
        assert_eq!(TruncatedFock::new(m8, 3).dim(), 165);
        assert_eq!(basis_size(8, 3), 165);
    }

    #[test]
    fn number_operator_is_diagonal() {
        let f = TruncatedFock::new(vec![c(1)], 2);
        let m = operator_matrix(&pair(cre(c(1)), ann(c(1))), &f).unwrap();
        let d = m.to_dense();
        assert_eq!(d, Matrix::from_fn(3, 3, |i, j| if i == j { Qi::int(i as i64) } else { Qi::zero() }));
    }

    #[test]
    fn creation_overflow_is_flagged() {
        let f = TruncatedFock::new(vec![c(1)], 1);
        let m = operator_matrix(&WeylElement::cre(c(1)), &f).unwrap();
        assert!(m.overflow);
        assert!(operator_matrix(&WeylElement::cre(c(2)), &f).is_err());
    }

    #[test]
    fn vacuum_decomposition_so8() {
        let g = so_star_generators(2).unwrap();
        let s = sp2_generator_set(2);
        let modes: Vec<ModeId> = (1..=4).map(ModeId::A).chain((1..=4).map(ModeId::B)).collect();
        let f = TruncatedFock::new(modes, 2);
        let t = joint_weight_decomposition(&g, &s, &f, 2).unwrap();
        let r0: Vec<_> = t.rows_at(0).collect();
        assert_eq!(r0.len(), 1);
        assert_eq!(r0[0].weight, vec![0, 0, 0, 2]);
        assert_eq!(r0[0].gauge_dim, 1);
        assert!(t.bookkeeping_holds());
        assert!(t.one_to_one());
    }

    #[test]
    fn cone_matrix_image() {
        for cutoff in [4, 6] {
            let r = nilpotent_cone_matrix_check(cutoff).unwrap();
            assert!(r.all_ok(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn closure_real_single_flavor() {
        let o = truncated_closure_check(DivisionAlgebra::R, 1, 1, 0);
        assert!(o.report.all_ok(), "{:?}", o.report.failures().collect::<Vec<_>>());
    }
}
