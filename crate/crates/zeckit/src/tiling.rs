//! Brute-force enumeration of colored board tilings.
//!
//! An n-board is a 1×n strip of cells. A tile of length i covers i cells and
//! comes in c_i colors, where the c_i are the coefficients of a recurrence in
//! tiling convention (a_0 = 1, later initials from the truncated recurrence).
//! The number of tilings of an n-board then equals a_n, which makes this
//! module an independent oracle for the recurrence evaluator: it counts
//! concrete combinatorial objects one by one instead of iterating the
//! recurrence.
//!
//! Beyond raw counts the module checks two structural facts about
//! second-order boards (squares and dominoes):
//!
//! - splitting the tilings of an n-board by breakability at a cell m gives
//!   the product decomposition u_m·u_{n-m} + t·u_{m-1}·u_{n-m-1};
//! - six labeled copies of the Pell n-board tilings map bijectively onto the
//!   (n+2)-board tilings together with the (n-2)-board tilings, witnessing
//!   6·p_n = p_{n+2} + p_{n-2} by explicit gluing and cutting.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::{RecurrenceSpec, SeqValue};

/// Enumeration guard: boards longer than this are refused (exponential work).
pub const MAX_BOARD: u64 = 25;

/// Guard for the six-copies bijection, which enumerates (n+2)-boards six
/// ways and cross-checks every image.
pub const MAX_BIJECTION_BOARD: u64 = 12;

/// One tile: `len` cells wide, wearing color `color` (1-based within the
/// palette of its length).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tile {
    pub len: u8,
    pub color: u8,
}

impl Tile {
    pub fn square(color: u8) -> Self {
        Tile { len: 1, color }
    }

    pub fn domino(color: u8) -> Self {
        Tile { len: 2, color }
    }
}

// Text form: squares carry their color index (S1, S2), a color-1 domino
// prints bare D, further domino colors D2, D3, ..., and longer tiles spell
// out length and color.
impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.len, self.color) {
            (1, c) => write!(f, "S{c}"),
            (2, 1) => write!(f, "D"),
            (2, c) => write!(f, "D{c}"),
            (l, c) => write!(f, "T{l}C{c}"),
        }
    }
}

/// An ordered list of tiles covering a board left to right.
///
/// Orders by the length sequence first, then by the color sequence, so that
/// enumeration output and set comparisons are canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tiling {
    tiles: Vec<Tile>,
}

impl Tiling {
    pub fn new(tiles: Vec<Tile>) -> Self {
        Tiling { tiles }
    }

    pub fn empty() -> Self {
        Tiling { tiles: Vec::new() }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    /// Total number of cells covered.
    pub fn board_len(&self) -> u64 {
        self.tiles.iter().map(|t| t.len as u64).sum()
    }

    /// True when a tile boundary sits immediately after cell m, i.e. the
    /// tiling splits into an m-prefix and an (n-m)-suffix.
    pub fn is_breakable_at(&self, m: u64) -> bool {
        let mut covered = 0u64;
        for tile in &self.tiles {
            covered += tile.len as u64;
            match covered.cmp(&m) {
                Ordering::Equal => return true,
                Ordering::Greater => return false,
                Ordering::Less => {}
            }
        }
        m == 0
    }
}

impl Ord for Tiling {
    fn cmp(&self, other: &Self) -> Ordering {
        let lens = self
            .tiles
            .iter()
            .map(|t| t.len)
            .cmp(other.tiles.iter().map(|t| t.len));
        if lens != Ordering::Equal {
            return lens;
        }
        self.tiles
            .iter()
            .map(|t| t.color)
            .cmp(other.tiles.iter().map(|t| t.color))
    }
}

impl PartialOrd for Tiling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tiles.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self.tiles.iter().map(Tile::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Squares and dominoes, one color each: counts are f_n = F_{n+1}.
pub fn fibonacci_board_spec() -> RecurrenceSpec {
    RecurrenceSpec::tiling_from_ints(&[1, 1]).expect("valid spec")
}

/// Squares in two colors, dominoes in one: counts are p_n = P_{n+1}.
pub fn pell_board_spec() -> RecurrenceSpec {
    RecurrenceSpec::tiling_from_ints(&[2, 1]).expect("valid spec")
}

/// Color palette per tile length: palette[i] colors for length i+1.
/// Requires a recurrence in tiling convention with coefficients in [0, 255].
fn palette(spec: &RecurrenceSpec) -> Result<Vec<u8>> {
    spec.check_tiling_initials()?;
    spec.coefficients()
        .iter()
        .map(|c| {
            c.to_u8().ok_or_else(|| {
                Error::InvalidSpec(format!(
                    "coefficient {c} is outside the tile palette range 0..=255"
                ))
            })
        })
        .collect()
}

fn check_board(n: u64, max: u64) -> Result<()> {
    if n > max {
        return Err(Error::BoardTooLarge {
            n: n as i64,
            max: max as i64,
        });
    }
    Ok(())
}

/// All tilings of an n-board, in canonical (lengths, colors) order.
/// The list length equals the recurrence value a_n.
pub fn enumerate(spec: &RecurrenceSpec, n: u64) -> Result<Vec<Tiling>> {
    let palette = palette(spec)?;
    check_board(n, MAX_BOARD)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    collect(&palette, n as usize, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

fn collect(palette: &[u8], remaining: usize, stack: &mut Vec<Tile>, out: &mut Vec<Tiling>) {
    if remaining == 0 {
        out.push(Tiling {
            tiles: stack.clone(),
        });
        return;
    }
    for (i, &colors) in palette.iter().enumerate() {
        let len = i + 1;
        if len > remaining {
            break;
        }
        for color in 1..=colors {
            stack.push(Tile {
                len: len as u8,
                color,
            });
            collect(palette, remaining - len, stack, out);
            stack.pop();
        }
    }
}

/// Number of tilings of an n-board, streamed: the same depth-first walk as
/// [`enumerate`], visiting one leaf per colored tiling, but never
/// materializing the tilings. Usable where the full list would not fit in
/// memory.
pub fn count(spec: &RecurrenceSpec, n: u64) -> Result<SeqValue> {
    let palette = palette(spec)?;
    check_board(n, MAX_BOARD)?;
    Ok(SeqValue::from(count_walk(&palette, n as usize)))
}

fn count_walk(palette: &[u8], remaining: usize) -> u128 {
    if remaining == 0 {
        return 1;
    }
    let mut acc = 0u128;
    for (i, &colors) in palette.iter().enumerate() {
        let len = i + 1;
        if len > remaining {
            break;
        }
        for _ in 0..colors {
            acc += count_walk(palette, remaining - len);
        }
    }
    acc
}

/// Breakability counts for every interior cell of an n-board, from a single
/// streamed walk: `breakable[m-1]` tilings have a boundary after cell m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    pub total: SeqValue,
    pub breakable: Vec<SeqValue>,
}

/// Computes the [`BoundaryProfile`] of an n-board. Each placed tile ending
/// at an interior cell contributes its whole subtree of completions to that
/// cell's breakable count.
pub fn boundary_profile(spec: &RecurrenceSpec, n: u64) -> Result<BoundaryProfile> {
    let palette = palette(spec)?;
    check_board(n, MAX_BOARD)?;
    let n = n as usize;
    let mut counters = vec![0u128; n.saturating_sub(1)];
    let total = profile_walk(&palette, n, 0, &mut counters);
    Ok(BoundaryProfile {
        total: SeqValue::from(total),
        breakable: counters.into_iter().map(SeqValue::from).collect(),
    })
}

fn profile_walk(palette: &[u8], n: usize, pos: usize, counters: &mut [u128]) -> u128 {
    if pos == n {
        return 1;
    }
    let remaining = n - pos;
    let mut acc = 0u128;
    for (i, &colors) in palette.iter().enumerate() {
        let len = i + 1;
        if len > remaining {
            break;
        }
        for _ in 0..colors {
            let sub = profile_walk(palette, n, pos + len, counters);
            let end = pos + len;
            if end < n {
                counters[end - 1] += sub;
            }
            acc += sub;
        }
    }
    acc
}

/// The tilings of an n-board split by breakability at cell m.
///
/// For a second-order spec, every unbreakable tiling has a domino across
/// cells m and m+1, and the two halves factor: |breakable| = u_m·u_{n-m},
/// |unbreakable| = t·u_{m-1}·u_{n-m-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakPartition {
    pub cell: u64,
    pub breakable: Vec<Tiling>,
    pub unbreakable: Vec<Tiling>,
}

pub fn break_at(spec: &RecurrenceSpec, n: u64, m: u64) -> Result<BreakPartition> {
    if m < 1 || m >= n {
        return Err(Error::CellOutOfRange {
            m: m as i64,
            n: n as i64,
        });
    }
    let all = enumerate(spec, n)?;
    let (breakable, unbreakable) = all.into_iter().partition(|t| t.is_breakable_at(m));
    Ok(BreakPartition {
        cell: m,
        breakable,
        unbreakable,
    })
}

/// Outcome of checking the explicit map from six labeled copies of the Pell
/// n-board tilings onto the (n+2)-board tilings plus the (n-2)-board
/// tilings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: u64,
    /// 6·p_n, the number of labeled inputs.
    pub domain_size: u64,
    /// p_{n+2}.
    pub upper_size: u64,
    /// p_{n-2}.
    pub lower_size: u64,
    /// Every input produced a well-formed image of the right board size.
    pub total: bool,
    /// No two inputs share an image.
    pub injective: bool,
    /// The images cover both codomain sets exactly.
    pub surjective: bool,
    /// The explicit inverse map returns every input unchanged.
    pub round_trip: bool,
    /// All of the above, plus the count identity 6·p_n = p_{n+2} + p_{n-2}.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Image {
    /// An (n+2)-board tiling.
    Upper(Tiling),
    /// An (n-2)-board tiling.
    Lower(Tiling),
}

/// Forward map. Copies 1-5 glue tiles onto the board end: a domino, or an
/// ordered pair of colored squares (black/white as colors 1/2). Copy 6 cuts
/// or splices: a tiling ending in a square gets a domino inserted before
/// that square (yielding exactly the (n+2)-tilings that end in
/// domino-then-square, the class copies 1-5 miss); a tiling ending in a
/// domino loses it, yielding an (n-2)-tiling.
fn glue(copy: u8, t: &Tiling) -> Image {
    let mut tiles = t.tiles.clone();
    match copy {
        1 => tiles.push(Tile::domino(1)),
        2..=5 => {
            let (c1, c2) = [(1, 1), (1, 2), (2, 1), (2, 2)][copy as usize - 2];
            tiles.push(Tile::square(c1));
            tiles.push(Tile::square(c2));
        }
        6 => {
            let last = *tiles.last().expect("boards of size >= 2 are nonempty");
            if last.len == 1 {
                tiles.insert(tiles.len() - 1, Tile::domino(1));
            } else {
                tiles.pop();
                return Image::Lower(Tiling { tiles });
            }
        }
        _ => unreachable!("copies are labeled 1..=6"),
    }
    Image::Upper(Tiling { tiles })
}

/// Explicit inverse of [`glue`]: classifies an image by its board and its
/// final tiles, returning the copy label and the source tiling.
fn cut(image: &Image) -> Option<(u8, Tiling)> {
    match image {
        Image::Lower(t) => {
            let mut tiles = t.tiles.clone();
            tiles.push(Tile::domino(1));
            Some((6, Tiling { tiles }))
        }
        Image::Upper(t) => {
            let mut tiles = t.tiles.clone();
            let last = *tiles.last()?;
            if last.len == 2 {
                tiles.pop();
                return Some((1, Tiling { tiles }));
            }
            let prev = *tiles.get(tiles.len().checked_sub(2)?)?;
            if prev.len == 1 {
                // ...square square: copies 2-5 by the color pair.
                tiles.pop();
                tiles.pop();
                let copy = 2 + (prev.color - 1) * 2 + (last.color - 1);
                Some((copy, Tiling { tiles }))
            } else {
                // ...domino square: copy 6 inserted the domino.
                tiles.remove(tiles.len() - 2);
                Some((6, Tiling { tiles }))
            }
        }
    }
}

/// Builds and verifies the six-copies bijection at board size n ∈ [2, 12],
/// including the count identity 6·p_n = p_{n+2} + p_{n-2}.
pub fn six_pell_bijection(n: u64) -> Result<BijectionReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the six-copies bijection needs a board of size at least 2",
        ));
    }
    check_board(n, MAX_BIJECTION_BOARD)?;
    let spec = pell_board_spec();
    let base = enumerate(&spec, n)?;
    let upper = enumerate(&spec, n + 2)?;
    let lower = enumerate(&spec, n - 2)?;

    let mut images = BTreeSet::new();
    let mut total = true;
    let mut injective = true;
    let mut round_trip = true;
    for copy in 1..=6u8 {
        for t in &base {
            let image = glue(copy, t);
            total &= match &image {
                Image::Upper(u) => u.board_len() == n + 2,
                Image::Lower(l) => l.board_len() == n - 2,
            };
            round_trip &= cut(&image) == Some((copy, t.clone()));
            injective &= images.insert(image);
        }
    }

    let codomain: BTreeSet<Image> = upper
        .iter()
        .cloned()
        .map(Image::Upper)
        .chain(lower.iter().cloned().map(Image::Lower))
        .collect();
    let surjective = images == codomain;

    let domain_size = 6 * base.len() as u64;
    let upper_size = upper.len() as u64;
    let lower_size = lower.len() as u64;
    let holds = total
        && injective
        && surjective
        && round_trip
        && domain_size == upper_size + lower_size;
    Ok(BijectionReport {
        n,
        domain_size,
        upper_size,
        lower_size,
        total,
        injective,
        surjective,
        round_trip,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::eval_general;

    fn lens(t: &Tiling) -> Vec<u8> {
        t.tiles().iter().map(|x| x.len).collect()
    }

    #[test]
    fn fibonacci_board_of_four() {
        let all = enumerate(&fibonacci_board_spec(), 4).unwrap();
        assert_eq!(all.len(), 5);
        let shapes: Vec<Vec<u8>> = all.iter().map(lens).collect();
        assert_eq!(
            shapes,
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 1],
                vec![2, 1, 1],
                vec![2, 2],
            ]
        );
    }

    #[test]
    fn empty_board_has_one_tiling() {
        for spec in [
            fibonacci_board_spec(),
            pell_board_spec(),
            RecurrenceSpec::tiling_from_ints(&[1, 1, 1]).unwrap(),
        ] {
            let all = enumerate(&spec, 0).unwrap();
            assert_eq!(all, vec![Tiling::empty()]);
        }
    }

    #[test]
    fn pell_board_of_two() {
        let all = enumerate(&pell_board_spec(), 2).unwrap();
        // Four colored square pairs, then the domino.
        let text: Vec<String> = all.iter().map(Tiling::to_string).collect();
        assert_eq!(text, vec!["S1 S1", "S1 S2", "S2 S1", "S2 S2", "D"]);
    }

    #[test]
    fn counts_match_recurrence_values() {
        let squares3_dominoes2 = RecurrenceSpec::tiling_from_ints(&[3, 2]).unwrap();
        let third_order = RecurrenceSpec::tiling_from_ints(&[1, 1, 1]).unwrap();
        for spec in [
            fibonacci_board_spec(),
            pell_board_spec(),
            squares3_dominoes2,
            third_order,
        ] {
            for n in 0..=10u64 {
                let listed = enumerate(&spec, n).unwrap();
                let streamed = count(&spec, n).unwrap();
                assert_eq!(SeqValue::from(listed.len()), streamed);
                assert_eq!(streamed, eval_general(&spec, n).unwrap(), "n = {n}");
            }
        }
    }

    #[test]
    fn enumeration_is_strictly_sorted() {
        for n in 0..=9u64 {
            let all = enumerate(&pell_board_spec(), n).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "n = {n}");
        }
    }

    #[test]
    fn breakability_products() {
        // Squares and dominoes, n = 5, m = 2: 2·3 + 1·1·2 = 8.
        let f = fibonacci_board_spec();
        let part = break_at(&f, 5, 2).unwrap();
        assert_eq!(part.breakable.len(), 6);
        assert_eq!(part.unbreakable.len(), 2);

        // Pell board, n = 4, m = 2: 5·5 + 2·2 = 29.
        let p = pell_board_spec();
        let part = break_at(&p, 4, 2).unwrap();
        assert_eq!(part.breakable.len(), 25);
        assert_eq!(part.unbreakable.len(), 4);

        // n = 2, m = 1: the unbreakable tilings are exactly the t dominoes.
        for (coeffs, t) in [([1i64, 1], 1usize), ([2, 1], 1), ([3, 2], 2)] {
            let spec = RecurrenceSpec::tiling_from_ints(&coeffs).unwrap();
            let part = break_at(&spec, 2, 1).unwrap();
            assert_eq!(part.unbreakable.len(), t);
        }
    }

    #[test]
    fn profile_agrees_with_partition() {
        let spec = RecurrenceSpec::tiling_from_ints(&[3, 2]).unwrap();
        for n in 2..=8u64 {
            let profile = boundary_profile(&spec, n).unwrap();
            assert_eq!(profile.total, count(&spec, n).unwrap());
            for m in 1..n {
                let part = break_at(&spec, n, m).unwrap();
                assert_eq!(
                    profile.breakable[(m - 1) as usize],
                    SeqValue::from(part.breakable.len()),
                    "n = {n}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn unbreakable_means_domino_across() {
        let p = pell_board_spec();
        for n in 2..=7u64 {
            for m in 1..n {
                let part = break_at(&p, n, m).unwrap();
                for t in &part.unbreakable {
                    // A domino must start at cell m (cover m, m+1).
                    let mut covered = 0u64;
                    let mut spanning = None;
                    for tile in t.tiles() {
                        if covered < m && covered + tile.len as u64 > m {
                            spanning = Some(*tile);
                        }
                        covered += tile.len as u64;
                    }
                    assert_eq!(spanning.map(|t| t.len), Some(2));
                }
            }
        }
    }

    #[test]
    fn six_copy_bijection_small_cases() {
        let r2 = six_pell_bijection(2).unwrap();
        assert_eq!(
            (r2.domain_size, r2.upper_size, r2.lower_size),
            (30, 29, 1)
        );
        assert!(r2.holds);

        let r3 = six_pell_bijection(3).unwrap();
        assert_eq!(
            (r3.domain_size, r3.upper_size, r3.lower_size),
            (72, 70, 2)
        );
        assert!(r3.holds);
    }

    #[test]
    fn copy_six_cuts_the_lone_domino() {
        // On the 2-board, the tiling (D) maps to the empty 0-board tiling.
        let image = glue(6, &Tiling::new(vec![Tile::domino(1)]));
        assert_eq!(image, Image::Lower(Tiling::empty()));
        // And a square-ending tiling gets the domino spliced in before it.
        let image = glue(6, &Tiling::new(vec![Tile::square(2), Tile::square(1)]));
        assert_eq!(
            image,
            Image::Upper(Tiling::new(vec![
                Tile::square(2),
                Tile::domino(1),
                Tile::square(1)
            ]))
        );
    }

    #[test]
    fn guards() {
        let f = fibonacci_board_spec();
        assert!(matches!(
            enumerate(&f, 26),
            Err(Error::BoardTooLarge { n: 26, max: 25 })
        ));
        assert!(matches!(
            break_at(&f, 5, 0),
            Err(Error::CellOutOfRange { m: 0, n: 5 })
        ));
        assert!(break_at(&f, 5, 5).is_err());
        assert!(six_pell_bijection(1).is_err());
        assert!(six_pell_bijection(13).is_err());

        // Initial values must be the tiling counts.
        let fib_sequence = crate::recurrence::SequenceFamily::Fibonacci.spec();
        assert!(matches!(
            enumerate(&fib_sequence, 3),
            Err(Error::SpecNotTilingConvention(_))
        ));

        // Palette bounds.
        let too_many = RecurrenceSpec::tiling_from_ints(&[300, 1]).unwrap();
        assert!(matches!(enumerate(&too_many, 2), Err(Error::InvalidSpec(_))));
        let negative = RecurrenceSpec::tiling_from_ints(&[-1, 1]).unwrap();
        assert!(enumerate(&negative, 2).is_err());
    }

    #[test]
    fn display_and_json_forms() {
        let t = Tiling::new(vec![Tile::square(1), Tile::square(2), Tile::domino(1)]);
        assert_eq!(t.to_string(), "S1 S2 D");
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"[{"len":1,"color":1},{"len":1,"color":2},{"len":2,"color":1}]"#
        );
        let back: Tiling = serde_json::from_str(
            r#"[{"len":1,"color":1},{"len":1,"color":2},{"len":2,"color":1}]"#,
        )
        .unwrap();
        assert_eq!(back, t);
        assert_eq!(Tiling::empty().to_string(), "(empty)");
        assert_eq!(Tile::domino(2).to_string(), "D2");
        assert_eq!(Tile { len: 3, color: 1 }.to_string(), "T3C1");
    }

    #[test]
    fn breakability_predicate() {
        let t = Tiling::new(vec![Tile::square(1), Tile::domino(1), Tile::square(1)]);
        assert!(t.is_breakable_at(1));
        assert!(!t.is_breakable_at(2));
        assert!(t.is_breakable_at(3));
        assert!(t.is_breakable_at(4));
        assert_eq!(t.board_len(), 4);
    }
}
