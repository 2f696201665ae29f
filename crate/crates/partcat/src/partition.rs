//! Partitions of upper and lower points with colors, canonical forms and
//! category operations.
//!
//! Points are numbered in reading order: upper row left to right, then
//! lower row left to right. A partition stores per-point colors and a
//! block assignment in restricted-growth form (blocks labeled by first
//! occurrence), which makes the canonical form unique and hashing and
//! ordering structural.

use crate::error::{PartError, Result};
use crate::signature::Signature;
use smallvec::SmallVec;

/// Point colors across the three regimes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Color {
    /// A `|` point carrying an N-dimensional index.
    Line,
    /// An extra singleton `▲`; always a singleton block, 1-dimensional.
    Extra,
    /// A white point `○` of the two-colored alphabet.
    White,
    /// A black point `●` of the two-colored alphabet.
    Black,
}

impl Color {
    /// Single-character code used in words and signatures.
    pub fn code(self) -> char {
        match self {
            Color::Line => '-',
            Color::Extra => 't',
            Color::White => 'w',
            Color::Black => 'b',
        }
    }

    /// Inverse of [`Color::code`].
    pub fn from_code(c: char) -> Option<Color> {
        match c {
            '-' => Some(Color::Line),
            't' => Some(Color::Extra),
            'w' => Some(Color::White),
            'b' => Some(Color::Black),
            _ => None,
        }
    }

    /// The dual color: lines and extra singletons are self-dual, white and
    /// black are dual to each other. Points take their dual color when a
    /// rotation moves them between rows.
    pub fn dual(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
            c => c,
        }
    }
}

/// The three color regimes a partition can live in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Regime {
    /// One-colored partitions: every point is a line.
    Plain,
    /// Lines plus extra singletons.
    Extra,
    /// White/black two-colored partitions.
    TwoColored,
}

impl Regime {
    /// Whether a color may appear in this regime.
    pub fn admits(self, c: Color) -> bool {
        match self {
            Regime::Plain => c == Color::Line,
            Regime::Extra => matches!(c, Color::Line | Color::Extra),
            Regime::TwoColored => matches!(c, Color::White | Color::Black),
        }
    }

    /// Name used in dumps and CLI flags.
    pub fn name(self) -> &'static str {
        match self {
            Regime::Plain => "plain",
            Regime::Extra => "extra",
            Regime::TwoColored => "twocol",
        }
    }

    /// Inverse of [`Regime::name`].
    pub fn from_name(s: &str) -> Option<Regime> {
        match s {
            "plain" => Some(Regime::Plain),
            "extra" => Some(Regime::Extra),
            "twocol" | "two-colored" | "2col" => Some(Regime::TwoColored),
            _ => None,
        }
    }
}

/// The smallest regime containing all given colors, or `MixedRegime` if the
/// colors span incompatible alphabets. An all-line (or empty) set is plain.
pub fn regime_of<'a, I: IntoIterator<Item = &'a Color>>(colors: I) -> Result<Regime> {
    let mut has_extra = false;
    let mut has_two = false;
    let mut has_line = false;
    for c in colors {
        match c {
            Color::Line => has_line = true,
            Color::Extra => has_extra = true,
            Color::White | Color::Black => has_two = true,
        }
    }
    match (has_two, has_line || has_extra) {
        (true, true) => Err(PartError::MixedRegime),
        (true, false) => Ok(Regime::TwoColored),
        (false, _) => Ok(if has_extra { Regime::Extra } else { Regime::Plain }),
    }
}

/// Side selector for rotations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Direction selector for rotations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RotationDirection {
    /// Move an endpoint from the lower row to the upper row.
    Up,
    /// Move an endpoint from the upper row to the lower row.
    Down,
}

type ColorVec = SmallVec<[Color; 12]>;
type BlockVec = SmallVec<[u8; 12]>;

/// A colored partition of `k` upper and `l` lower points in canonical form.
///
/// Equality, hashing and ordering act on the canonical form, so two
/// partitions compare equal exactly when they have the same colors and the
/// same block structure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    upper_len: u16,
    colors: ColorVec,
    /// Block id per point, restricted-growth: first occurrences are 0,1,2,...
    block_ids: BlockVec,
}

fn canonicalize_ids(ids: &mut BlockVec) {
    let mut map: SmallVec<[u8; 16]> = SmallVec::new();
    map.resize(ids.len().max(1), u8::MAX);
    let mut next = 0u8;
    for id in ids.iter_mut() {
        let slot = &mut map[*id as usize];
        if *slot == u8::MAX {
            *slot = next;
            next += 1;
        }
        *id = *slot;
    }
}

impl Partition {
    /// The empty partition `P(0,0)`, the tensor unit.
    pub fn empty() -> Partition {
        Partition { upper_len: 0, colors: SmallVec::new(), block_ids: SmallVec::new() }
    }

    /// Build a partition from rows of colors and a list of blocks given as
    /// 0-based point indices in reading order.
    ///
    /// Rejects overlapping or non-covering blocks, extra singletons inside
    /// larger blocks, and color sets spanning more than one regime.
    pub fn make(upper: &[Color], lower: &[Color], blocks: &[Vec<usize>]) -> Result<Partition> {
        let n = upper.len() + lower.len();
        let mut colors: ColorVec = SmallVec::with_capacity(n);
        colors.extend_from_slice(upper);
        colors.extend_from_slice(lower);
        regime_of(colors.iter())?;
        if n > u8::MAX as usize {
            return Err(PartError::BadParam(format!("partition too large: {n} points")));
        }

        let mut ids: BlockVec = SmallVec::new();
        ids.resize(n, u8::MAX);
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartError::InvalidBlocks(format!("block {b} is empty")));
            }
            for &pt in block {
                if pt >= n {
                    return Err(PartError::InvalidBlocks(format!(
                        "point index {pt} out of range (0..{n})"
                    )));
                }
                if ids[pt] != u8::MAX {
                    return Err(PartError::InvalidBlocks(format!("point {pt} used twice")));
                }
                ids[pt] = b as u8;
            }
            if block.len() > 1 {
                if let Some(&pt) = block.iter().find(|&&pt| colors[pt] == Color::Extra) {
                    return Err(PartError::ExtraSingletonInBlock(pt));
                }
            }
        }
        if let Some(pt) = ids.iter().position(|&id| id == u8::MAX) {
            return Err(PartError::InvalidBlocks(format!("point {pt} not covered")));
        }
        canonicalize_ids(&mut ids);
        Ok(Partition { upper_len: upper.len() as u16, colors, block_ids: ids })
    }

    pub(crate) fn from_raw(upper_len: usize, colors: ColorVec, mut ids: BlockVec) -> Partition {
        debug_assert_eq!(colors.len(), ids.len());
        canonicalize_ids(&mut ids);
        Partition { upper_len: upper_len as u16, colors, block_ids: ids }
    }

    /// Number of upper points `k`.
    pub fn num_upper(&self) -> usize {
        self.upper_len as usize
    }

    /// Number of lower points `l`.
    pub fn num_lower(&self) -> usize {
        self.colors.len() - self.upper_len as usize
    }

    /// Total number of points `k + l`.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Upper row colors, left to right.
    pub fn upper(&self) -> &[Color] {
        &self.colors[..self.upper_len as usize]
    }

    /// Lower row colors, left to right.
    pub fn lower(&self) -> &[Color] {
        &self.colors[self.upper_len as usize..]
    }

    /// All point colors in reading order.
    pub fn point_colors(&self) -> &[Color] {
        &self.colors
    }

    /// Block id of a point (restricted-growth labels).
    pub fn block_id(&self, point: usize) -> usize {
        self.block_ids[point] as usize
    }

    /// Number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.block_ids.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    /// Blocks as sorted 0-based point indices, ordered by minimal point.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.num_blocks()];
        for (pt, &b) in self.block_ids.iter().enumerate() {
            out[b as usize].push(pt);
        }
        out
    }

    /// Size of the block containing `point`.
    pub fn block_size(&self, point: usize) -> usize {
        let id = self.block_ids[point];
        self.block_ids.iter().filter(|&&b| b == id).count()
    }

    /// True if `point` is a singleton.
    pub fn is_singleton(&self, point: usize) -> bool {
        self.block_size(point) == 1
    }

    /// The smallest regime containing this partition's colors.
    pub fn regime(&self) -> Regime {
        regime_of(self.colors.iter()).expect("stored partitions are single-regime")
    }

    /// True if the partition is valid in `regime` (plain partitions embed
    /// into the extra-singleton regime).
    pub fn fits(&self, regime: Regime) -> bool {
        self.colors.iter().all(|&c| regime.admits(c))
    }

    /// The `(upper word, lower word)` signature.
    pub fn signature(&self) -> Signature {
        Signature::new(self.upper().to_vec(), self.lower().to_vec())
    }

    /// Tensor product: `q` drawn to the right of `self`.
    pub fn tensor(&self, q: &Partition) -> Result<Partition> {
        regime_of(self.colors.iter().chain(q.colors.iter()))?;
        let k = self.num_upper() + q.num_upper();
        let n = self.len() + q.len();
        if n > u8::MAX as usize {
            return Err(PartError::BadParam(format!("tensor too large: {n} points")));
        }
        let mut colors: ColorVec = SmallVec::with_capacity(n);
        colors.extend_from_slice(self.upper());
        colors.extend_from_slice(q.upper());
        colors.extend_from_slice(self.lower());
        colors.extend_from_slice(q.lower());
        let shift = self.num_blocks() as u8;
        let mut ids: BlockVec = SmallVec::with_capacity(n);
        ids.extend_from_slice(&self.block_ids[..self.upper_len as usize]);
        ids.extend(q.block_ids[..q.upper_len as usize].iter().map(|&b| b + shift));
        ids.extend_from_slice(&self.block_ids[self.upper_len as usize..]);
        ids.extend(q.block_ids[q.upper_len as usize..].iter().map(|&b| b + shift));
        Ok(Partition::from_raw(k, colors, ids))
    }

    /// Composition `self ∘ p` (`self` drawn below `p`), with the number of
    /// removed middle components that carry an N-dimensional color.
    ///
    /// The lower word of `p` must equal the upper word of `self`. Every
    /// removed middle component counts as one loop, including isolated
    /// middle singletons, except components made of extra singletons: those
    /// live in a 1-dimensional space and contribute no scalar.
    pub fn compose(&self, p: &Partition) -> Result<(Partition, u32)> {
        let q = self;
        if p.lower() != q.upper() {
            return Err(PartError::SignatureMismatch(
                crate::signature::word_string(p.lower()),
                crate::signature::word_string(q.upper()),
            ));
        }
        let k = p.num_upper();
        let mid = p.num_lower();
        let m = q.num_lower();
        let total = k + mid + m;

        // Union-find over upper, middle, lower points of the stack.
        let mut parent: SmallVec<[u8; 24]> = SmallVec::with_capacity(total);
        for i in 0..total {
            parent.push(i as u8);
        }
        fn find(parent: &mut SmallVec<[u8; 24]>, mut x: u8) -> u8 {
            while parent[x as usize] != x {
                let gp = parent[parent[x as usize] as usize];
                parent[x as usize] = gp;
                x = gp;
            }
            x
        }
        fn union(parent: &mut SmallVec<[u8; 24]>, a: u8, b: u8) {
            let ra = find(parent, a);
            let rb = find(parent, b);
            if ra != rb {
                parent[ra.max(rb) as usize] = ra.min(rb);
            }
        }
        // p occupies nodes 0..k+mid; q occupies k..k+mid+m shifted by k.
        let mut first_of_block: SmallVec<[u8; 16]> = SmallVec::new();
        first_of_block.resize(p.num_blocks(), u8::MAX);
        for (pt, &b) in p.block_ids.iter().enumerate() {
            let node = pt as u8;
            let f = &mut first_of_block[b as usize];
            if *f == u8::MAX {
                *f = node;
            } else {
                union(&mut parent, *f, node);
            }
        }
        first_of_block.clear();
        first_of_block.resize(q.num_blocks(), u8::MAX);
        for (pt, &b) in q.block_ids.iter().enumerate() {
            let node = (pt + k) as u8;
            let f = &mut first_of_block[b as usize];
            if *f == u8::MAX {
                *f = node;
            } else {
                union(&mut parent, *f, node);
            }
        }

        // Middle components touching neither outer row are loops; extra
        // singleton components carry dimension 1 and do not count.
        let is_outer = |node: usize| node < k || node >= k + mid;
        let mut loops = 0u32;
        let mut root_state: SmallVec<[u8; 24]> = SmallVec::new();
        root_state.resize(total, 0); // 1 = has outer point, 2 = has line/colored point
        for node in 0..total {
            let r = find(&mut parent, node as u8) as usize;
            if is_outer(node) {
                root_state[r] |= 1;
            }
            let color = if node < k + mid { p.colors[node] } else { q.colors[node - k] };
            if color != Color::Extra {
                root_state[r] |= 2;
            }
        }
        for node in 0..total {
            if find(&mut parent, node as u8) as usize == node && root_state[node] & 1 == 0 {
                if root_state[node] & 2 != 0 {
                    loops += 1;
                }
            }
        }

        // Project onto outer points.
        let n = k + m;
        let mut colors: ColorVec = SmallVec::with_capacity(n);
        colors.extend_from_slice(p.upper());
        colors.extend_from_slice(q.lower());
        let mut root_label: SmallVec<[u8; 24]> = SmallVec::new();
        root_label.resize(total, u8::MAX);
        let mut ids: BlockVec = SmallVec::with_capacity(n);
        let mut next = 0u8;
        for node in (0..k).chain(k + mid..total) {
            let r = find(&mut parent, node as u8) as usize;
            if root_label[r] == u8::MAX {
                root_label[r] = next;
                next += 1;
            }
            ids.push(root_label[r]);
        }
        Ok((Partition::from_raw(k, colors, ids), loops))
    }

    /// Involution: the partition reflected across the horizontal axis.
    pub fn involute(&self) -> Partition {
        let k = self.num_upper();
        let n = self.len();
        let mut colors: ColorVec = SmallVec::with_capacity(n);
        colors.extend_from_slice(self.lower());
        colors.extend_from_slice(self.upper());
        let mut ids: BlockVec = SmallVec::with_capacity(n);
        ids.extend_from_slice(&self.block_ids[k..]);
        ids.extend_from_slice(&self.block_ids[..k]);
        Partition::from_raw(self.num_lower(), colors, ids)
    }

    /// Rotate one endpoint between the rows. The moved point takes its dual
    /// color; rotating up then down on the same side is the identity.
    pub fn rotate(&self, side: Side, dir: RotationDirection) -> Result<Partition> {
        let k = self.num_upper();
        let l = self.num_lower();
        let n = self.len();
        // (source position, position of the moved point in the new reading order)
        let (src, dst, new_k) = match (side, dir) {
            (Side::Left, RotationDirection::Up) => {
                if l == 0 {
                    return Err(PartError::BadParam("rotate up: lower row is empty".into()));
                }
                (k, 0, k + 1)
            }
            (Side::Right, RotationDirection::Up) => {
                if l == 0 {
                    return Err(PartError::BadParam("rotate up: lower row is empty".into()));
                }
                (n - 1, k, k + 1)
            }
            (Side::Left, RotationDirection::Down) => {
                if k == 0 {
                    return Err(PartError::BadParam("rotate down: upper row is empty".into()));
                }
                (0, k - 1, k - 1)
            }
            (Side::Right, RotationDirection::Down) => {
                if k == 0 {
                    return Err(PartError::BadParam("rotate down: upper row is empty".into()));
                }
                (k - 1, n - 1, k - 1)
            }
        };
        let mut order: SmallVec<[u8; 16]> = (0..n as u8).collect();
        order.remove(src);
        order.insert(dst, src as u8);
        let mut colors: ColorVec = SmallVec::with_capacity(n);
        let mut ids: BlockVec = SmallVec::with_capacity(n);
        for (pos, &old) in order.iter().enumerate() {
            let c = self.colors[old as usize];
            colors.push(if pos == dst { c.dual() } else { c });
            ids.push(self.block_ids[old as usize]);
        }
        Ok(Partition::from_raw(new_k, colors, ids))
    }

    /// Swap white and black on every point. Two-colored regime only
    /// (the empty partition is allowed).
    pub fn color_invert(&self) -> Result<Partition> {
        if !self.fits(Regime::TwoColored) {
            return Err(PartError::MixedRegime);
        }
        let mut colors = self.colors.clone();
        for c in colors.iter_mut() {
            *c = c.dual();
        }
        Ok(Partition { upper_len: self.upper_len, colors, block_ids: self.block_ids.clone() })
    }

    /// True if no two blocks cross when the partition is drawn with all
    /// lines between the two rows.
    ///
    /// Crossing is tested in the cyclic boundary order: upper row left to
    /// right, then lower row right to left.
    pub fn is_noncrossing(&self) -> bool {
        let cyclic = self.cyclic_order();
        let blocks = self.blocks();
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if blocks_cross(&cyclic, &blocks[i], &blocks[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Position of each point in the cyclic boundary order.
    pub(crate) fn cyclic_order(&self) -> Vec<usize> {
        let k = self.num_upper();
        let n = self.len();
        let mut pos = vec![0usize; n];
        for (i, p) in (0..k).enumerate() {
            pos[p] = i;
        }
        for (i, p) in (k..n).rev().enumerate() {
            pos[p] = k + i;
        }
        pos
    }
}

/// Whether two blocks interleave in the given cyclic order.
pub(crate) fn blocks_cross(cyclic: &[usize], a: &[usize], b: &[usize]) -> bool {
    // Walk the circle; crossing means the pattern a..b..a..b appears.
    let n = cyclic.len();
    let mut kind = vec![0u8; n];
    for &p in a {
        kind[cyclic[p]] = 1;
    }
    for &p in b {
        kind[cyclic[p]] = 2;
    }
    // Count sign changes around the circle between the two block labels.
    let seq: Vec<u8> = kind.iter().copied().filter(|&x| x != 0).collect();
    let mut changes = 0;
    for w in seq.windows(2) {
        if w[0] != w[1] {
            changes += 1;
        }
    }
    if seq.len() >= 2 && seq[0] != seq[seq.len() - 1] {
        changes += 1;
    }
    changes >= 4
}
