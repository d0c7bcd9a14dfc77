//! Simply 3-suitable permutation families: the beta-set verifier, the
//! doubly-exponential recursive construction, an exhaustive minimality
//! search at small n, and permutation extraction from box representations
//! of fully subdivided complete graphs.

use crate::error::{Error, Result};
use crate::graph::{full_subdivision, Graph};
use crate::interval::{verify_box_representation, BoxRep};

/// Bijection on the ground set `[n] = {1, ..., n}` with both directions
/// materialized: `forward` maps position -> element and `inverse` maps
/// element -> position (both 1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line image sequence
    /// `forward[pos-1] = element`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut inverse = vec![0usize; n];
        for (pos0, &elem) in images.iter().enumerate() {
            if elem == 0 || elem > n {
                return Err(Error::ElementOutOfRange { element: elem, n });
            }
            if inverse[elem - 1] != 0 {
                return Err(Error::NotAPermutation);
            }
            inverse[elem - 1] = pos0 + 1;
        }
        Ok(Permutation {
            forward: images,
            inverse,
        })
    }

    /// Builds a permutation from its inverse: `positions[elem-1] = position`.
    pub fn from_positions(positions: Vec<usize>) -> Result<Self> {
        let n = positions.len();
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut forward = vec![0usize; n];
        for (elem0, &pos) in positions.iter().enumerate() {
            if pos == 0 || pos > n {
                return Err(Error::ElementOutOfRange { element: pos, n });
            }
            if forward[pos - 1] != 0 {
                return Err(Error::NotAPermutation);
            }
            forward[pos - 1] = elem0 + 1;
        }
        Ok(Permutation {
            forward,
            inverse: positions,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_images((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.forward.len()
    }

    /// Element at `position` (1-based).
    pub fn image(&self, position: usize) -> usize {
        self.forward[position - 1]
    }

    /// Position of `element` (1-based).
    pub fn position(&self, element: usize) -> usize {
        self.inverse[element - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.forward
    }

    /// Restriction to `[n1]`: elements above `n1` are dropped, relative order
    /// is kept.
    pub fn restrict(&self, n1: usize) -> Result<Self> {
        if n1 == 0 || n1 > self.n() {
            return Err(Error::ElementOutOfRange {
                element: n1,
                n: self.n(),
            });
        }
        Self::from_images(
            self.forward
                .iter()
                .copied()
                .filter(|&e| e <= n1)
                .collect(),
        )
    }
}

/// Ordered family of permutations over a common ground set `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationFamily {
    n: usize,
    perms: Vec<Permutation>,
}

impl PermutationFamily {
    pub fn new(n: usize, perms: Vec<Permutation>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        for p in &perms {
            if p.n() != n {
                return Err(Error::VertexCountMismatch {
                    left: n,
                    right: p.n(),
                });
            }
        }
        Ok(PermutationFamily { n, perms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// Restriction of every member to `[n1]`.
    pub fn restrict(&self, n1: usize) -> Result<Self> {
        let perms = self
            .perms
            .iter()
            .map(|p| p.restrict(n1))
            .collect::<Result<Vec<_>>>()?;
        PermutationFamily::new(n1, perms)
    }
}

/// Elements lying strictly between `s` and `t` in the order of `sigma`, in
/// either orientation. Symmetric in `s` and `t`; undefined (an error) for
/// `s = t`.
pub fn beta(s: usize, t: usize, sigma: &Permutation) -> Result<Vec<usize>> {
    let n = sigma.n();
    if s == 0 || s > n {
        return Err(Error::ElementOutOfRange { element: s, n });
    }
    if t == 0 || t > n {
        return Err(Error::ElementOutOfRange { element: t, n });
    }
    if s == t {
        return Err(Error::BetaEqualElements(s));
    }
    let lo = sigma.position(s).min(sigma.position(t));
    let hi = sigma.position(s).max(sigma.position(t));
    let mut out: Vec<usize> = (lo + 1..hi).map(|pos| sigma.image(pos)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Searches for a witness triple `(x, s, t)` with `s < t` such that `x` lies
/// strictly between `s` and `t` in every member of the family. `None` means
/// the family is simply 3-suitable.
///
/// The scan is deterministic: smallest failing `x` first, then the first
/// opposing pair found in element order.
pub fn simply_3_suitable_witness(family: &PermutationFamily) -> Option<(usize, usize, usize)> {
    let n = family.n();
    let p = family.len();
    if n < 3 || p == 0 {
        // with no triples nothing can be sandwiched; an empty family over
        // n >= 3 boxes every middle element
        if n >= 3 && p == 0 {
            return Some((2, 1, 3));
        }
        return None;
    }
    // positions flattened per element for cache-friendly scanning
    let mut pos = vec![0u32; n * p];
    for (i, perm) in family.perms().iter().enumerate() {
        for e in 1..=n {
            pos[(e - 1) * p + i] = perm.position(e) as u32;
        }
    }
    if p <= 6 {
        witness_occupancy(n, p, &pos)
    } else if p <= 16 {
        witness_bucketed(n, p, &pos)
    } else {
        witness_generic(n, p, &pos)
    }
}

/// Fast path for families of at most 6 permutations: per candidate middle
/// element, accumulate which of the `2^p` side vectors occur at all, then
/// look for an occupied complementary pair. The per-element pass is a tight
/// branch-free loop; only a confirmed failure is rescanned for the
/// deterministic witness.
fn witness_occupancy(n: usize, p: usize, pos: &[u32]) -> Option<(usize, usize, usize)> {
    let mut columns = vec![vec![0u32; n]; p];
    for e in 0..n {
        for i in 0..p {
            columns[i][e] = pos[e * p + i];
        }
    }
    let cols: Vec<&[u32]> = columns.iter().map(Vec::as_slice).collect();
    fn occupancy<const P: usize>(cols: &[&[u32]], px: &[u32], lo: usize, hi: usize) -> u64 {
        let mut slices = [cols[0]; P];
        let mut pxa = [0u32; P];
        for i in 0..P {
            slices[i] = &cols[i][lo..hi];
            pxa[i] = px[i];
        }
        let mut occ = 0u64;
        for j in 0..hi - lo {
            let mut b = 0u32;
            for i in 0..P {
                b |= ((slices[i][j] < pxa[i]) as u32) << i;
            }
            occ |= 1u64 << b;
        }
        occ
    }
    let full = (1u32 << p) - 1;
    for x in 1..=n {
        let px = &pos[(x - 1) * p..x * p];
        let occ = match p {
            1 => occupancy::<1>(&cols, px, 0, x - 1) | occupancy::<1>(&cols, px, x, n),
            2 => occupancy::<2>(&cols, px, 0, x - 1) | occupancy::<2>(&cols, px, x, n),
            3 => occupancy::<3>(&cols, px, 0, x - 1) | occupancy::<3>(&cols, px, x, n),
            4 => occupancy::<4>(&cols, px, 0, x - 1) | occupancy::<4>(&cols, px, x, n),
            5 => occupancy::<5>(&cols, px, 0, x - 1) | occupancy::<5>(&cols, px, x, n),
            _ => occupancy::<6>(&cols, px, 0, x - 1) | occupancy::<6>(&cols, px, x, n),
        };
        let boxed = (0..=full / 2).any(|b| {
            occ >> b & 1 != 0 && occ >> (full ^ b) & 1 != 0
        });
        if boxed {
            // deterministic witness: rescan this x with first-seen tracking
            let mut first = vec![0usize; 1 << p];
            let mut seen = vec![false; 1 << p];
            for y in 1..=n {
                if y == x {
                    continue;
                }
                let py = &pos[(y - 1) * p..y * p];
                let mut b = 0u32;
                for i in 0..p {
                    b |= ((py[i] < px[i]) as u32) << i;
                }
                let comp = (full ^ b) as usize;
                if seen[comp] {
                    let z = first[comp];
                    return Some((x, z.min(y), z.max(y)));
                }
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    first[b as usize] = y;
                }
            }
            unreachable!("occupancy found a complementary pair");
        }
    }
    None
}

/// `x` is boxed by `(s, t)` iff the p-bit side vectors of `s` and `t`
/// relative to `x` are bitwise complements: in every permutation one of them
/// sits before `x` and the other after. Buckets elements by side vector and
/// looks for an occupied complementary pair.
fn witness_bucketed(n: usize, p: usize, pos: &[u32]) -> Option<(usize, usize, usize)> {
    let full: u32 = if p == 32 { u32::MAX } else { (1u32 << p) - 1 };
    let mut first = vec![0u32; 1 << p];
    let mut stamp = vec![0u32; 1 << p];
    let mut gen = 0u32;
    for x in 1..=n {
        gen += 1;
        let px = &pos[(x - 1) * p..x * p];
        for y in 1..=n {
            if y == x {
                continue;
            }
            let py = &pos[(y - 1) * p..y * p];
            let mut vec_y = 0u32;
            for i in 0..p {
                vec_y |= ((py[i] < px[i]) as u32) << i;
            }
            let comp = (!vec_y) & full;
            if stamp[comp as usize] == gen {
                let z = first[comp as usize] as usize;
                return Some((x, z.min(y), z.max(y)));
            }
            if stamp[vec_y as usize] != gen {
                stamp[vec_y as usize] = gen;
                first[vec_y as usize] = y as u32;
            }
        }
    }
    None
}

/// Fallback for wide families: hash the side vectors instead of indexing.
fn witness_generic(n: usize, p: usize, pos: &[u32]) -> Option<(usize, usize, usize)> {
    use std::collections::HashMap;
    let mut first: HashMap<Vec<bool>, usize> = HashMap::new();
    for x in 1..=n {
        first.clear();
        let px = &pos[(x - 1) * p..x * p];
        for y in 1..=n {
            if y == x {
                continue;
            }
            let py = &pos[(y - 1) * p..y * p];
            let vec_y: Vec<bool> = (0..p).map(|i| py[i] < px[i]).collect();
            let comp: Vec<bool> = vec_y.iter().map(|&b| !b).collect();
            if let Some(&z) = first.get(&comp) {
                return Some((x, z.min(y), z.max(y)));
            }
            first.entry(vec_y).or_insert(y);
        }
    }
    None
}

/// True iff for every pair `s, t` the beta-sets over the family have empty
/// common intersection.
pub fn is_simply_3_suitable(family: &PermutationFamily) -> bool {
    simply_3_suitable_witness(family).is_none()
}

/// `2^(2^i)`.
fn double_power(i: u32) -> u128 {
    1u128 << (1u128 << i)
}

/// `ceil(log2 log2 n)` for `n >= 2`: the least `i` with `n <= 2^(2^i)`.
pub fn ceil_log2_log2(n: usize) -> u32 {
    assert!(n >= 2);
    (0..7).find(|&i| (n as u128) <= double_power(i)).unwrap()
}

/// Minimum possible size of a simply 3-suitable family for `[n]`:
/// `ceil(log2 log2 n) + 1`. For `n = 1` the single trivial permutation is
/// forced, so the answer is 1.
pub fn suitable_family_size_formula(n: usize) -> usize {
    if n == 1 {
        1
    } else {
        ceil_log2_log2(n) as usize + 1
    }
}

/// Builds a simply 3-suitable family for `[n]` of the minimum size
/// `ceil(log2 log2 n) + 1`.
///
/// The family for `n = 2^(2^i)` is built by recursion on i: members of the
/// family for the square root act block-wise and element-wise, and one extra
/// member reverses the block order of the last member. Other sizes build at
/// the next such power and restrict to `[n]`.
pub fn build_simply_3_suitable(n: usize) -> Result<PermutationFamily> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n == 1 {
        return PermutationFamily::new(1, vec![Permutation::identity(1)?]);
    }
    let i = ceil_log2_log2(n);
    let family = build_at_double_power(i)?;
    if (n as u128) == double_power(i) {
        Ok(family)
    } else {
        family.restrict(n)
    }
}

fn build_at_double_power(i: u32) -> Result<PermutationFamily> {
    if i == 0 {
        return PermutationFamily::new(2, vec![Permutation::identity(2)?]);
    }
    let prev = build_at_double_power(i - 1)?;
    let n1 = prev.n();
    let n = n1 * n1;
    let mut perms = Vec::with_capacity(prev.len() + 1);
    // element a = (p-1)*n1 + k acts block-wise by eta(p) and inside the
    // block by eta(k)
    for eta in prev.perms() {
        let mut positions = vec![0usize; n];
        for a in 1..=n {
            let p = (a - 1) / n1 + 1;
            let k = (a - 1) % n1 + 1;
            positions[a - 1] = (eta.position(p) - 1) * n1 + eta.position(k);
        }
        perms.push(Permutation::from_positions(positions)?);
    }
    // extra member: same within-block order, block order reversed
    let last = &prev.perms()[prev.len() - 1];
    let mut positions = vec![0usize; n];
    for a in 1..=n {
        let p = (a - 1) / n1 + 1;
        let k = (a - 1) % n1 + 1;
        positions[a - 1] = (n1 - last.position(p)) * n1 + last.position(k);
    }
    perms.push(Permutation::from_positions(positions)?);
    PermutationFamily::new(n, perms)
}

pub const MAX_SEARCH_N: usize = 7;

/// Exact minimum size of a simply 3-suitable family for `[n]`, certified by
/// exhaustive search over families with the first permutation fixed to the
/// identity (relabeling the ground set by the inverse of any member preserves
/// simply 3-suitability, so this loses no generality).
///
/// Supported for `2 <= n <= 7`; `cap` bounds the family size tried.
pub fn min_simply_3_suitable_size(n: usize, cap: usize) -> Result<usize> {
    if !(2..=MAX_SEARCH_N).contains(&n) {
        return Err(Error::SearchSizeUnsupported {
            n,
            max: MAX_SEARCH_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|s| (s + 1..=n).map(move |t| (s, t)))
        .collect();
    // byte b of the packed mask holds the beta-set of pair b as an element
    // bitmask; the bytewise AND of packed masks is the pairwise beta
    // intersection of a whole family
    let pack = |perm: &Permutation| -> [u64; 3] {
        let mut packed = [0u64; 3];
        for (b, &(s, t)) in pairs.iter().enumerate() {
            let mut mask = 0u8;
            for x in beta(s, t, perm).expect("pairs are valid") {
                mask |= 1 << (x - 1);
            }
            packed[b / 8] |= (mask as u64) << (8 * (b % 8));
        }
        packed
    };
    let id = Permutation::identity(n)?;
    let id_mask = pack(&id);
    if id_mask == [0, 0, 0] {
        return Ok(1);
    }
    // candidate masks relative to the identity, for every non-identity
    // permutation of [n]
    let mut candidates = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        if images != id.images() {
            let perm = Permutation::from_images(images.clone())?;
            let m = pack(&perm);
            candidates.push([
                m[0] & id_mask[0],
                m[1] & id_mask[1],
                m[2] & id_mask[2],
            ]);
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    // suffix AND: the best any tail of the candidate list can still clear
    let mut suffix = vec![[u64::MAX; 3]; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        suffix[i] = [
            suffix[i + 1][0] & candidates[i][0],
            suffix[i + 1][1] & candidates[i][1],
            suffix[i + 1][2] & candidates[i][2],
        ];
    }
    fn zero(m: &[u64; 3]) -> bool {
        m[0] == 0 && m[1] == 0 && m[2] == 0
    }
    fn dfs(
        candidates: &[[u64; 3]],
        suffix: &[[u64; 3]],
        start: usize,
        current: [u64; 3],
        left: usize,
    ) -> bool {
        if zero(&current) {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in start..candidates.len() {
            let joined = [
                current[0] & candidates[i][0],
                current[1] & candidates[i][1],
                current[2] & candidates[i][2],
            ];
            if joined == current {
                continue; // candidate removes nothing new
            }
            let reachable = [
                joined[0] & suffix[i + 1][0],
                joined[1] & suffix[i + 1][1],
                joined[2] & suffix[i + 1][2],
            ];
            if left > 1 && !zero(&reachable) && !zero(&joined) {
                continue;
            }
            if dfs(candidates, suffix, i + 1, joined, left - 1) {
                return true;
            }
        }
        false
    }
    for size in 2..=cap {
        if dfs(&candidates, &suffix, 0, id_mask, size - 1) {
            return Ok(size);
        }
    }
    Err(Error::SearchCapExceeded { n, cap })
}

/// Lexicographic next permutation of `v`; false when `v` was the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Result of extracting endpoint-order permutations from a box
/// representation of a fully subdivided complete graph.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub family: PermutationFamily,
    /// Outcome of re-verifying the extracted family; guaranteed true for any
    /// valid input meeting the endpoint preconditions.
    pub suitable: bool,
}

/// From a valid representation of `full_subdivision(K_n)` extracts, per
/// dimension, the permutation of `[n]` ordering the original vertices by
/// left endpoint and the one ordering them by right endpoint.
///
/// Within each dimension the original-vertex intervals must have pairwise
/// distinct left endpoints and pairwise distinct right endpoints. A
/// dimension assigning the *same* interval to every original vertex (such as
/// the edge-index dimension of the upper-bound construction) carries no
/// order information and can never separate an original vertex from a
/// subdivision vertex, so it contributes the vertex-id order instead; any
/// other tie is an error.
pub fn extract_family_from_boxrep(b: &BoxRep, n: usize) -> Result<Extraction> {
    if n < 2 {
        return Err(Error::CompleteTooSmall(n));
    }
    let kn_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let kn = Graph::from_edge_list(n, &kn_pairs)?;
    let (target, _) = full_subdivision(&kn);
    if !verify_box_representation(&target, b)?.valid {
        return Err(Error::InvalidRepresentation);
    }
    let mut perms = Vec::with_capacity(2 * b.k());
    for (dim_idx, dim) in b.dims().iter().enumerate() {
        let originals: Vec<(i64, i64)> = (0..n).map(|v| dim.interval(v)).collect();
        if originals.iter().all(|&iv| iv == originals[0]) {
            let id = Permutation::identity(n)?;
            perms.push(id.clone());
            perms.push(id);
            continue;
        }
        perms.push(order_by(&originals, dim_idx, "left", |iv| iv.0)?);
        perms.push(order_by(&originals, dim_idx, "right", |iv| iv.1)?);
    }
    let family = PermutationFamily::new(n, perms)?;
    let suitable = is_simply_3_suitable(&family);
    Ok(Extraction { family, suitable })
}

fn order_by(
    originals: &[(i64, i64)],
    dim: usize,
    side: &'static str,
    key: impl Fn(&(i64, i64)) -> i64,
) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..originals.len()).collect();
    order.sort_by_key(|&v| key(&originals[v]));
    for w in order.windows(2) {
        if key(&originals[w[0]]) == key(&originals[w[1]]) {
            return Err(Error::TiedEndpoints(w[0], w[1], side, dim));
        }
    }
    // position j holds the element with the j-th smallest endpoint
    Permutation::from_images(order.into_iter().map(|v| v + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(n: usize, images: &[&[usize]]) -> PermutationFamily {
        PermutationFamily::new(
            n,
            images
                .iter()
                .map(|im| Permutation::from_images(im.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn beta_on_identity() {
        let id = Permutation::identity(5).unwrap();
        assert_eq!(beta(2, 5, &id).unwrap(), vec![3, 4]);
        assert_eq!(beta(2, 3, &id).unwrap(), Vec::<usize>::new());
        assert_eq!(beta(5, 2, &id).unwrap(), vec![3, 4]);
    }

    #[test]
    fn beta_on_shuffled_order() {
        // order (3,4,1,2): positions of 1 and 4 are 3 and 2
        let p = Permutation::from_images(vec![3, 4, 1, 2]).unwrap();
        assert_eq!(beta(1, 4, &p).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn beta_rejects_equal_and_out_of_range() {
        let id = Permutation::identity(3).unwrap();
        assert_eq!(beta(2, 2, &id).unwrap_err(), Error::BetaEqualElements(2));
        assert!(matches!(
            beta(0, 1, &id),
            Err(Error::ElementOutOfRange { .. })
        ));
        assert!(matches!(
            beta(1, 4, &id),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn suitability_small_cases() {
        assert!(is_simply_3_suitable(&family(2, &[&[1, 2]])));
        let f = family(3, &[&[1, 2, 3]]);
        assert_eq!(simply_3_suitable_witness(&f), Some((2, 1, 3)));
        assert!(is_simply_3_suitable(&family(
            4,
            &[&[1, 2, 3, 4], &[3, 4, 1, 2]]
        )));
    }

    #[test]
    fn formula_values() {
        let expected = [
            (2, 1),
            (3, 2),
            (4, 2),
            (5, 3),
            (16, 3),
            (17, 4),
            (256, 4),
            (257, 5),
            (65536, 5),
        ];
        for (n, want) in expected {
            assert_eq!(suitable_family_size_formula(n), want, "n = {n}");
        }
    }

    #[test]
    fn build_matches_unrolled_recursion_at_4() {
        let f = build_simply_3_suitable(4).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.perms()[0].images(), &[1, 2, 3, 4]);
        // inverse 1->3, 2->4, 3->1, 4->2, i.e. one-line (3,4,1,2)
        assert_eq!(f.perms()[1].images(), &[3, 4, 1, 2]);
        assert!(is_simply_3_suitable(&f));
    }

    #[test]
    fn build_sizes_and_validity() {
        for n in [1, 2, 3, 5, 7, 16, 33, 64] {
            let f = build_simply_3_suitable(n).unwrap();
            assert_eq!(f.len(), suitable_family_size_formula(n), "size at n={n}");
            assert!(is_simply_3_suitable(&f), "validity at n={n}");
        }
    }

    #[test]
    fn restriction_preserves_suitability() {
        let f = build_simply_3_suitable(16).unwrap();
        for n1 in 2..16 {
            assert!(is_simply_3_suitable(&f.restrict(n1).unwrap()));
        }
    }

    #[test]
    fn exhaustive_minimum_matches_formula() {
        for n in 2..=6 {
            assert_eq!(
                min_simply_3_suitable_size(n, 4).unwrap(),
                suitable_family_size_formula(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn search_rejects_out_of_range() {
        assert!(matches!(
            min_simply_3_suitable_size(1, 4),
            Err(Error::SearchSizeUnsupported { .. })
        ));
        assert!(matches!(
            min_simply_3_suitable_size(8, 4),
            Err(Error::SearchSizeUnsupported { .. })
        ));
    }

    #[test]
    fn search_reports_cap() {
        assert!(matches!(
            min_simply_3_suitable_size(5, 2),
            Err(Error::SearchCapExceeded { n: 5, cap: 2 })
        ));
    }

    #[test]
    fn permutation_round_trip() {
        let p = Permutation::from_images(vec![3, 1, 2]).unwrap();
        assert_eq!(p.position(3), 1);
        assert_eq!(p.image(p.position(2)), 2);
        let q = Permutation::from_positions(vec![2, 3, 1]).unwrap();
        assert_eq!(q.images(), &[3, 1, 2]);
    }

    #[test]
    fn restrict_keeps_relative_order() {
        let p = Permutation::from_images(vec![3, 4, 1, 2]).unwrap();
        assert_eq!(p.restrict(3).unwrap().images(), &[3, 1, 2]);
    }
}
