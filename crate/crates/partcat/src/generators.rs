//! Generator catalog and combinatorial enumerators.

use crate::error::{PartError, Result};
use crate::partition::{Color, Partition};
use crate::signature::Signature;

use Color::{Black, Extra, Line, White};

/// The pair partition `⊓ ∈ P(0,2)`.
pub fn pairpart() -> Partition {
    Partition::make(&[], &[Line, Line], &[vec![0, 1]]).unwrap()
}

/// The identity partition on one line.
pub fn idpart() -> Partition {
    Partition::make(&[Line], &[Line], &[vec![0, 1]]).unwrap()
}

/// The lower singleton `↓`.
pub fn singleton() -> Partition {
    Partition::make(&[], &[Line], &[vec![0]]).unwrap()
}

/// The lower extra singleton `▲`.
pub fn extra_singleton() -> Partition {
    Partition::make(&[], &[Extra], &[vec![0]]).unwrap()
}

/// The identity-shaped pair of extra singletons: one `▲` above one `▲`,
/// both singleton blocks.
pub fn idext() -> Partition {
    Partition::make(&[Extra], &[Extra], &[vec![0], vec![1]]).unwrap()
}

/// `▲ ⊗ ▲` on the lower row.
pub fn extra_pair_tensor() -> Partition {
    Partition::make(&[], &[Extra, Extra], &[vec![0], vec![1]]).unwrap()
}

/// The crossing partition on two strands.
pub fn crosspart() -> Partition {
    Partition::make(&[Line, Line], &[Line, Line], &[vec![0, 3], vec![1, 2]]).unwrap()
}

/// The four-point block in `P(0,4)`.
pub fn fourpart() -> Partition {
    Partition::make(&[], &[Line; 4], &[vec![0, 1, 2, 3]]).unwrap()
}

/// The half-liberating partition `P(a b c ; c b a)`.
pub fn halflibpart() -> Partition {
    Partition::make(&[Line; 3], &[Line; 3], &[vec![0, 5], vec![1, 4], vec![2, 3]]).unwrap()
}

/// The disconnected identity: an upper singleton over a lower singleton.
/// `(1/N) T` of it projects onto the all-ones vector.
pub fn disconnecter() -> Partition {
    Partition::make(&[Line], &[Line], &[vec![0], vec![1]]).unwrap()
}

/// The `▲`-crossing `P(a x:t ; y:t a)`: one line strand passing over an
/// extra singleton on each row. Its relation is `v_ij r = r v_ij`.
pub fn positionerext() -> Partition {
    Partition::make(&[Line, Extra], &[Extra, Line], &[vec![0, 3], vec![1], vec![2]]).unwrap()
}

/// `P(a b x:t ; y:t a b)`: two line strands passing over an extra
/// singleton. Its relation is `v_ij v_kl r = r v_ij v_kl`.
pub fn globcolext() -> Partition {
    Partition::make(
        &[Line, Line, Extra],
        &[Extra, Line, Line],
        &[vec![0, 4], vec![1, 5], vec![2], vec![3]],
    )
    .unwrap()
}

/// `b_k^▲ ∈ P(0,2k)`: a block of length `k` on the odd positions with `k`
/// extra singletons interleaved on the even positions.
pub fn b_k_ext(k: u32) -> Result<Partition> {
    if k == 0 {
        return Err(PartError::BadParam("b_k_ext needs k >= 1".into()));
    }
    let k = k as usize;
    let mut lower = Vec::with_capacity(2 * k);
    let mut block = Vec::new();
    let mut blocks = Vec::new();
    for i in 0..2 * k {
        if i % 2 == 0 {
            lower.push(Line);
            block.push(i);
        } else {
            lower.push(Extra);
            blocks.push(vec![i]);
        }
    }
    blocks.insert(0, block);
    Partition::make(&[], &lower, &blocks)
}

/// `(↓ ⊗ ▲)^{⊗k}`: alternating line and extra singletons on the lower row.
pub fn alt_tensor(k: u32) -> Result<Partition> {
    if k == 0 {
        return Ok(Partition::empty());
    }
    let step = singleton().tensor(&extra_singleton()).unwrap();
    let mut out = step.clone();
    for _ in 1..k {
        out = out.tensor(&step).unwrap();
    }
    Ok(out)
}

/// Colored identity partition.
pub fn identity_colored(upper: Color, lower: Color) -> Partition {
    Partition::make(&[upper], &[lower], &[vec![0, 1]]).unwrap()
}

/// Colored lower pair.
pub fn pair_colored(c1: Color, c2: Color) -> Partition {
    Partition::make(&[], &[c1, c2], &[vec![0, 1]]).unwrap()
}

/// Colored lower singleton.
pub fn singleton_colored(c: Color) -> Partition {
    Partition::make(&[], &[c], &[vec![0]]).unwrap()
}

/// Look up a generator by catalog name, with an optional parameter for the
/// parametric families.
pub fn generator(name: &str, param: Option<u32>) -> Result<Partition> {
    let need_k = || param.ok_or_else(|| PartError::BadParam(format!("`{name}` needs k")));
    match name {
        "pairpart" => Ok(pairpart()),
        "idpart" => Ok(idpart()),
        "singleton" => Ok(singleton()),
        "extra_singleton" => Ok(extra_singleton()),
        "idext" => Ok(idext()),
        "extra_pair" => Ok(extra_pair_tensor()),
        "crosspart" => Ok(crosspart()),
        "fourpart" => Ok(fourpart()),
        "halflibpart" => Ok(halflibpart()),
        "disconnecter" => Ok(disconnecter()),
        "positionerext" => Ok(positionerext()),
        "globcolext" => Ok(globcolext()),
        "b_k_ext" => b_k_ext(need_k()?),
        "alt_tensor" => alt_tensor(need_k()?),
        _ => Err(PartError::UnknownGenerator(name.to_string())),
    }
}

/// All set partitions of the points of `sig`, with extra-singleton points
/// forced to be singletons.
pub fn all_partitions(sig: &Signature) -> Vec<Partition> {
    let colors: Vec<Color> = sig.upper().iter().chain(sig.lower()).copied().collect();
    let n = colors.len();
    let mut out = Vec::new();
    // enumerate restricted growth strings
    let mut ids = vec![0u8; n];
    fn rec(
        i: usize,
        maxid: u8,
        colors: &[Color],
        ids: &mut Vec<u8>,
        sig: &Signature,
        out: &mut Vec<Partition>,
    ) {
        if i == colors.len() {
            let blocks = {
                let nb = ids.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
                let mut blocks = vec![Vec::new(); nb];
                for (pt, &b) in ids.iter().enumerate() {
                    blocks[b as usize].push(pt);
                }
                blocks
            };
            out.push(
                Partition::make(sig.upper(), sig.lower(), &blocks)
                    .expect("enumerated partition is valid"),
            );
            return;
        }
        if colors[i] == Color::Extra {
            ids[i] = maxid;
            rec(i + 1, maxid + 1, colors, ids, sig, out);
            return;
        }
        for b in 0..=maxid {
            // extra singleton blocks may not be joined
            if (0..i).any(|j| ids[j] == b && colors[j] == Color::Extra) {
                continue;
            }
            ids[i] = b;
            rec(i + 1, maxid.max(b + 1), colors, ids, sig, out);
        }
    }
    if n == 0 {
        return vec![Partition::empty()];
    }
    rec(0, 0, &colors, &mut ids, sig, &mut out);
    out
}

/// All non-crossing pair partitions of `sig` (empty if the total number of
/// points is odd). Crossing is taken in the two-row drawing.
pub fn nc_pair_partitions(sig: &Signature) -> Vec<Partition> {
    let n = sig.len();
    if n % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for m in perfect_matchings(n) {
        let blocks: Vec<Vec<usize>> = m.iter().map(|&(a, b)| vec![a, b]).collect();
        if let Ok(p) = Partition::make(sig.upper(), sig.lower(), &blocks) {
            if p.is_noncrossing() {
                out.push(p);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All perfect matchings of `{0, .., n-1}` as sorted pair lists.
pub fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    if n % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Regime;

    #[test]
    fn b_3_ext_shape() {
        let p = b_k_ext(3).unwrap();
        assert_eq!(p.num_lower(), 6);
        assert_eq!(p.blocks(), vec![vec![0, 2, 4], vec![1], vec![3], vec![5]]);
        assert_eq!(p.lower(), &[Line, Extra, Line, Extra, Line, Extra]);
    }

    #[test]
    fn catalog_regimes() {
        assert_eq!(positionerext().regime(), Regime::Extra);
        assert_eq!(fourpart().regime(), Regime::Plain);
        assert_eq!(generator("fourpart", None).unwrap(), fourpart());
        assert!(matches!(generator("nope", None), Err(PartError::UnknownGenerator(_))));
        assert!(matches!(generator("b_k_ext", None), Err(PartError::BadParam(_))));
    }

    #[test]
    fn catalan_counts_for_nc_pairings() {
        let catalan = [1usize, 1, 2, 5, 14];
        for k in 1..=4 {
            let sig = Signature::new(vec![], vec![Line; 2 * k]);
            assert_eq!(nc_pair_partitions(&sig).len(), catalan[k]);
        }
        // counts are split invariant
        let sig = Signature::new(vec![Line; 3], vec![Line; 3]);
        assert_eq!(nc_pair_partitions(&sig).len(), 5);
    }

    #[test]
    fn bell_counts_for_all_partitions() {
        let bell = [1usize, 1, 2, 5, 15, 52];
        for n in 0..=5 {
            let sig = Signature::new(vec![], vec![Line; n]);
            assert_eq!(all_partitions(&sig).len(), bell[n]);
        }
        // extra singletons cut the count down: ▲ points stay singletons
        let sig = Signature::new(vec![], vec![Line, Extra, Line]);
        // partitions of {0,2} times forced singleton {1}
        assert_eq!(all_partitions(&sig).len(), 2);
    }

    #[test]
    fn mixed_regime_rejected() {
        let e = Partition::make(&[White], &[Line], &[vec![0, 1]]);
        assert!(matches!(e, Err(PartError::MixedRegime)));
    }

    #[test]
    fn extra_in_block_rejected() {
        let e = Partition::make(&[Extra, Line], &[], &[vec![0, 1]]);
        assert!(matches!(e, Err(PartError::ExtraSingletonInBlock(_))));
    }

    #[test]
    fn black_white_identity() {
        let p = identity_colored(White, Black);
        assert_eq!(p.upper(), &[White]);
        assert_eq!(p.lower(), &[Black]);
    }
}
