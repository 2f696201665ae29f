//! The matrix realization `T_p` of partitions and linear combinations, the
//! Mor-space rank, and the functoriality checks.
//!
//! `T_p` sends a basis vector indexed by the upper multi-index to the sum
//! of lower basis vectors whose joint index assignment is constant on every
//! block. Extra singleton points carry a one-dimensional space and do not
//! contribute indices; in the standard context every other color carries
//! dimension N.
//!
//! The `UTarget` context realizes extra-singleton partitions inside the
//! ambient `C^N`: line points range over the first `N-1` coordinates and
//! every extra singleton is pinned to the last coordinate. This is the
//! realization that conjugation by the orthogonal matrix `U` produces.

use crate::error::{PartError, Result};
use crate::linear::Lin;
use crate::matrix::ExactMatrix;
use crate::partition::{Color, Partition};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Dimension context for `T_p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TContext {
    /// dim(line) = dim(white) = dim(black) = N, dim(extra) = 1.
    Standard,
    /// Embedded realization in `C^N`: every point carries dimension N, line
    /// indices range over `1..N`, extra singletons are pinned to index `N`.
    UTarget,
}

fn color_dim(c: Color, n: u32, ctx: TContext) -> u32 {
    match ctx {
        TContext::Standard => match c {
            Color::Extra => 1,
            _ => n,
        },
        TContext::UTarget => n,
    }
}

/// Per-point dimensions of a word.
pub fn word_dims(word: &[Color], n: u32, ctx: TContext) -> Vec<u32> {
    word.iter().map(|&c| color_dim(c, n, ctx)).collect()
}

/// The block-membership delta of Eq.-style index assignments: 1 iff all
/// points of each block carry one value. Indices are 1-based; extra
/// singleton points must carry the unique index of their one-dimensional
/// space (1 in the standard context, N in the embedded one).
pub fn delta_p(p: &Partition, upper_idx: &[u32], lower_idx: &[u32]) -> Result<bool> {
    if upper_idx.len() != p.num_upper() {
        return Err(PartError::ArityMismatch { expected: p.num_upper(), got: upper_idx.len() });
    }
    if lower_idx.len() != p.num_lower() {
        return Err(PartError::ArityMismatch { expected: p.num_lower(), got: lower_idx.len() });
    }
    let value = |pt: usize| {
        if pt < p.num_upper() {
            upper_idx[pt]
        } else {
            lower_idx[pt - p.num_upper()]
        }
    };
    for block in p.blocks() {
        let v0 = value(block[0]);
        if block.iter().any(|&pt| value(pt) != v0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The matrix of `T_p` for a single partition. Entries are 0/1.
pub fn t_matrix(p: &Partition, n: u32, ctx: TContext) -> ExactMatrix<Scalar> {
    assert!(n >= 1, "context N must be positive");
    let row_dims = word_dims(p.lower(), n, ctx);
    let col_dims = word_dims(p.upper(), n, ctx);
    let mut out = ExactMatrix::zero(row_dims.clone(), col_dims.clone());

    // One index value per block; extra singleton blocks are pinned.
    let blocks = p.blocks();
    let nb = blocks.len();
    let ranges: Vec<(u32, u32)> = blocks
        .iter()
        .map(|b| {
            let c = p.point_colors()[b[0]];
            match (ctx, c) {
                (TContext::Standard, Color::Extra) => (1, 1),
                (TContext::Standard, _) => (1, n),
                (TContext::UTarget, Color::Extra) => (n, n),
                (TContext::UTarget, _) => (1, n - 1),
            }
        })
        .collect();
    if ranges.iter().any(|&(lo, hi)| hi < lo) {
        return out; // no admissible line index (embedded context at N = 1)
    }

    let k = p.num_upper();
    let mut values: Vec<u32> = ranges.iter().map(|r| r.0).collect();
    let mut upper_idx = vec![1u32; k];
    let mut lower_idx = vec![1u32; p.num_lower()];
    loop {
        for pt in 0..p.len() {
            let v = values[p.block_id(pt)];
            if pt < k {
                upper_idx[pt] = v;
            } else {
                lower_idx[pt - k] = v;
            }
        }
        let r = ExactMatrix::<Scalar>::flatten(&row_dims, &lower_idx);
        let c = ExactMatrix::<Scalar>::flatten(&col_dims, &upper_idx);
        out.add_entry(r, c, Scalar::from_integer(1));

        let mut i = nb;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if values[i] < ranges[i].1 {
                values[i] += 1;
                for v in values[i + 1..].iter_mut().zip(&ranges[i + 1..]) {
                    *v.0 = v.1 .0;
                }
                break;
            }
        }
    }
}

/// Linear extension: `T` of a formal combination of partitions.
pub fn t_matrix_lc(lc: &Lin, ctx: TContext) -> ExactMatrix<Scalar> {
    let n = lc.context();
    let row_dims = word_dims(lc.signature().lower(), n, ctx);
    let col_dims = word_dims(lc.signature().upper(), n, ctx);
    let mut out = ExactMatrix::zero(row_dims, col_dims);
    for (p, coeff) in lc.terms() {
        out = out.add(&t_matrix(p, n, ctx).scale(coeff));
    }
    out
}

/// Exact dimension of `span{T_p}` over Q(sqrt N) for partitions sharing a
/// signature.
pub fn mor_dim(gens: &[Partition], sig: &Signature, n: u32) -> Result<usize> {
    for p in gens {
        if p.signature() != *sig {
            return Err(PartError::SignatureMismatch(p.signature().to_string(), sig.to_string()));
        }
    }
    let vectors: Vec<_> = gens.iter().map(|p| t_matrix(p, n, TContext::Standard)).collect();
    Ok(ExactMatrix::rank_of_vectors(&vectors))
}

/// Report of the three functoriality identities for a composable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TFunctorReport {
    /// `T_{qp} * N^{rl} == T_q T_p`.
    pub composition_ok: bool,
    /// `T_{p*} == T_p†` for both operands.
    pub involution_ok: bool,
    /// `T_{p⊗q} == T_p ⊗ T_q`.
    pub tensor_ok: bool,
    /// First differing `(row, col)` if a check failed.
    pub witness: Option<(u64, u64)>,
}

impl TFunctorReport {
    pub fn all_ok(&self) -> bool {
        self.composition_ok && self.involution_ok && self.tensor_ok
    }
}

fn first_difference(a: &ExactMatrix<Scalar>, b: &ExactMatrix<Scalar>) -> Option<(u64, u64)> {
    for (&k, v) in a.iter() {
        if b.get(k.0, k.1) != Some(v) {
            return Some(k);
        }
    }
    for (&k, v) in b.iter() {
        if a.get(k.0, k.1) != Some(v) {
            return Some(k);
        }
    }
    None
}

/// Check `T_{qp} N^{rl} = T_q T_p`, `T_{p*} = T_p†` and `T_{p⊗q} = T_p⊗T_q`
/// exactly at dimension `n` for a composable pair.
pub fn verify_t_functor(q: &Partition, p: &Partition, n: u32) -> Result<TFunctorReport> {
    let (qp, loops) = q.compose(p)?;
    let ctx = TContext::Standard;
    let tp = t_matrix(p, n, ctx);
    let tq = t_matrix(q, n, ctx);

    let lhs = t_matrix(&qp, n, ctx).scale(&Scalar::nat_pow(n, loops as i32));
    let rhs = tq.mul(&tp);
    let mut witness = first_difference(&lhs, &rhs);
    let composition_ok = witness.is_none();

    let involution_ok = t_matrix(&p.involute(), n, ctx) == tp.dagger()
        && t_matrix(&q.involute(), n, ctx) == tq.dagger();

    let ten = p.tensor(q)?;
    let t_ten = t_matrix(&ten, n, ctx);
    let kron = tp.kron(&tq);
    let tensor_ok = t_ten == kron;
    if witness.is_none() && !tensor_ok {
        witness = first_difference(&t_ten, &kron);
    }

    Ok(TFunctorReport { composition_ok, involution_ok, tensor_ok, witness })
}

/// Dump header plus sorted entries in the documented matrix format.
pub fn dump_t_matrix(p: &Partition, n: u32, ctx: TContext) -> String {
    let m = t_matrix(p, n, ctx);
    format!("T {} N={}\n{}", p.signature(), n, m.dump_entries())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::partition::Color::{Extra, Line};

    #[test]
    fn pair_matrix_is_unit_column() {
        // T_⊓(1) = Σ e_i ⊗ e_i: at N=2 the column (1,0,0,1)ᵀ
        let m = t_matrix(&generators::pairpart(), 2, TContext::Standard);
        assert_eq!(m.rows(), 4);
        assert_eq!(m.cols(), 1);
        let ones: Vec<u64> = m.iter().map(|(&(r, _), _)| r).collect();
        assert_eq!(ones, vec![0, 3]);
    }

    #[test]
    fn positionerext_matrix_is_identity() {
        for n in 1..=4 {
            let m = t_matrix(&generators::positionerext(), n, TContext::Standard);
            assert_eq!(m, ExactMatrix::identity(vec![1, n]).mul(&ExactMatrix::identity(vec![n, 1])));
            assert_eq!(m.num_entries(), n as usize);
            for (&(r, c), v) in m.iter() {
                assert_eq!(r, c);
                assert_eq!(v, &Scalar::from_integer(1));
            }
        }
    }

    #[test]
    fn delta_p_identity_partition() {
        let id = generators::idpart();
        assert!(delta_p(&id, &[3], &[3]).unwrap());
        assert!(!delta_p(&id, &[3], &[4]).unwrap());
        assert!(matches!(
            delta_p(&id, &[3, 1], &[3]),
            Err(PartError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn eq_pext_t_map() {
        // T_p(e_i1 ⊗ e_i2 ⊗ e_i3) = δ_{i2 i3} e_{i2} ⊗ e_{i2} ⊗ Σ_k e_k
        let p = Partition::make(
            &[Line, Line, Extra, Extra, Line],
            &[Extra, Line, Line, Extra, Line],
            &[vec![0], vec![1, 4, 6, 7], vec![2], vec![3], vec![5], vec![8], vec![9]],
        )
        .unwrap();
        let n = 3u32;
        let m = t_matrix(&p, n, TContext::Standard);
        // i = (1, 2, 2): expect hits at j = (2,2,k) for all k
        for i3 in 1..=n {
            let hit = i3 == 2;
            let col = ExactMatrix::<Scalar>::flatten(&[n, n, 1, 1, n], &[1, 2, 1, 1, i3]);
            let count = m.iter().filter(|(&(_, c), _)| c == col).count();
            assert_eq!(count, if hit { n as usize } else { 0 });
        }
    }

    #[test]
    fn mor_dim_examples() {
        // all non-crossing pairings on (0,4): rank 2 at N=3, rank 1 at N=1
        let sig = Signature::new(vec![], vec![Line; 4]);
        let nc = generators::nc_pair_partitions(&sig);
        assert_eq!(nc.len(), 2);
        assert_eq!(mor_dim(&nc, &sig, 3).unwrap(), 2);
        assert_eq!(mor_dim(&nc, &sig, 1).unwrap(), 1);
        assert_eq!(mor_dim(&nc[..1], &sig, 2).unwrap(), 1);
    }

    #[test]
    fn functor_identities_on_named_pairs() {
        // ⊔ after ⊓ gives a loop: T_⊔ T_⊓ = N
        let pair = generators::pairpart();
        let copair = pair.involute();
        for n in 1..=4 {
            let rep = verify_t_functor(&copair, &pair, n).unwrap();
            assert!(rep.all_ok(), "failed at N={n}: {rep:?}");
        }
        // the §7.1-style composition with extra singletons
        let id = generators::idpart();
        let rep = verify_t_functor(&id, &id, 3).unwrap();
        assert!(rep.all_ok());
    }
}
