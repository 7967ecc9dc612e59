//! Rational tangle operations on the four-marked sphere and the hungry-form
//! gluing `Q₀ ⊔_σ Q₁`.
//!
//! A tangle operation `σ` is recorded as a word in the half-twists `s1`, `s2`,
//! `s3`, where `sk` exchanges the marked points at positions `k-1` and `k`
//! (0-based). Words read left to right: the first letter is applied first.
//! Only the induced permutation of the marked points matters for label
//! compatibility; the full word is kept in the gluing record.

use std::fmt;
use std::str::FromStr;

use crate::engine::{guts_contribution, ContributionKind};
use crate::error::{GutsError, Result};
use crate::orbifold::{LabelQuadruple, MirroredDiskOrbifold};
use crate::splitting::{SideConfiguration, SideShape};

/// Permutation of the positions `0..4`; `image(i)` is where the point at
/// position `i` ends up.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm4([usize; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn from_images(images: [usize; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i >= 4 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm4(images))
    }

    pub fn transposition(i: usize, j: usize) -> Self {
        let mut images = [0, 1, 2, 3];
        images.swap(i, j);
        Perm4(images)
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> [usize; 4] {
        self.0
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Perm4) -> Perm4 {
        Perm4(self.0.map(|i| next.0[i]))
    }

    pub fn inverse(&self) -> Perm4 {
        let mut inv = [0; 4];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm4(inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Moves the label at position `i` to position `image(i)`.
    pub fn apply(&self, q: &LabelQuadruple) -> LabelQuadruple {
        let src = q.labels();
        let mut out = src;
        for (i, &l) in src.iter().enumerate() {
            out[self.0[i]] = l;
        }
        LabelQuadruple::new(out)
    }

    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        if let Some(p) = Perm4::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Cycle notation on marked points `1..=4`, e.g. `(1 3)`; `()` for identity.
impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        let mut done = [false; 4];
        for start in 0..4 {
            if done[start] || self.0[start] == start {
                continue;
            }
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !done[i] {
                done[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i];
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A half-twist `s1..s3` or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    generator: u8,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: u8, inverse: bool) -> Option<Self> {
        (1..=3)
            .contains(&generator)
            .then_some(Letter { generator, inverse })
    }

    pub fn alphabet() -> [Letter; 6] {
        let l = |g, inv| Letter {
            generator: g,
            inverse: inv,
        };
        [
            l(1, false),
            l(1, true),
            l(2, false),
            l(2, true),
            l(3, false),
            l(3, true),
        ]
    }

    pub fn generator(&self) -> u8 {
        self.generator
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            inverse: !self.inverse,
            ..*self
        }
    }

    pub fn transposition(&self) -> Perm4 {
        let k = usize::from(self.generator);
        Perm4::transposition(k - 1, k)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s{}{}",
            self.generator,
            if self.inverse { "'" } else { "" }
        )
    }
}

impl FromStr for Letter {
    type Err = GutsError;
    fn from_str(token: &str) -> Result<Self> {
        let err = || GutsError::InvalidWordToken(token.to_string());
        let body = token.strip_prefix('s').ok_or_else(err)?;
        let (digit, inverse) = match body.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (body, false),
        };
        let generator: u8 = digit.parse().map_err(|_| err())?;
        Letter::new(generator, inverse).ok_or_else(err)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TangleWord(Vec<Letter>);

impl TangleWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        TangleWord(letters)
    }

    pub fn empty() -> Self {
        TangleWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &TangleWord) -> TangleWord {
        TangleWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> TangleWord {
        TangleWord(self.0.iter().rev().map(Letter::inverted).collect())
    }

    pub fn induced_permutation(&self) -> Perm4 {
        induced_permutation(self)
    }

    pub fn reduce(&self) -> TangleWord {
        reduce(self)
    }

    /// A word whose induced permutation is `perm` (adjacent-swap sort).
    pub fn realizing(perm: &Perm4) -> TangleWord {
        let mut at = [0usize, 1, 2, 3]; // at[pos] = original point now at pos
        let mut letters = Vec::new();
        loop {
            let swap = (1..4).find(|&k| perm.image(at[k - 1]) > perm.image(at[k]));
            let Some(k) = swap else { break };
            at.swap(k - 1, k);
            letters.push(Letter::new(k as u8, false).unwrap());
        }
        TangleWord(letters)
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for TangleWord {
    type Err = GutsError;
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(TangleWord)
    }
}

pub fn induced_permutation(w: &TangleWord) -> Perm4 {
    w.0.iter()
        .fold(Perm4::IDENTITY, |acc, l| acc.then(&l.transposition()))
}

/// Free reduction: cancels adjacent `sk sk'` and `sk' sk`.
pub fn reduce(w: &TangleWord) -> TangleWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    TangleWord(out)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GluingRecord {
    pub sigma: TangleWord,
    pub reduced: TangleWord,
    pub induced_permutation: Perm4,
}

impl GluingRecord {
    pub fn new(sigma: TangleWord) -> Self {
        GluingRecord {
            reduced: sigma.reduce(),
            induced_permutation: sigma.induced_permutation(),
            sigma,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HungrySurface {
    Sphere4(LabelQuadruple),
    MirroredDisk(MirroredDiskOrbifold),
}

impl HungrySurface {
    pub fn quadruple(&self) -> LabelQuadruple {
        match self {
            HungrySurface::Sphere4(q) => *q,
            HungrySurface::MirroredDisk(d) => d.double_quadruple(),
        }
    }
}

/// An orbifold with empty guts: two sides glued along the isotopy cylinder
/// of a tangle operation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HungryForm {
    surface: HungrySurface,
    boundary: LabelQuadruple,
    side0: SideShape,
    side1: SideShape,
    gluing: GluingRecord,
}

impl HungryForm {
    pub fn surface(&self) -> &HungrySurface {
        &self.surface
    }

    pub fn gluing(&self) -> &GluingRecord {
        &self.gluing
    }

    /// Marked-point order on side 0.
    pub fn boundary(&self) -> &LabelQuadruple {
        &self.boundary
    }

    /// Marked-point order on side 1, i.e. side 0's labels carried by `σ`.
    pub fn glued_boundary(&self) -> LabelQuadruple {
        self.gluing.induced_permutation.apply(&self.boundary)
    }

    /// Splits the glued orbifold along the surface again, rebuilding and
    /// revalidating both sides from the recorded shapes.
    pub fn split(&self) -> Result<(SideConfiguration, SideConfiguration)> {
        let side0 = SideConfiguration::new(self.side0.clone(), self.boundary)?;
        let side1 = SideConfiguration::new(self.side1.clone(), self.glued_boundary())?;
        Ok((side0, side1))
    }
}

fn require_empty(side: &SideConfiguration) -> Result<()> {
    let c = guts_contribution(side)?;
    if c.kind != ContributionKind::Empty {
        return Err(GutsError::NotEmptyGuts(c.coefficient.to_string()));
    }
    Ok(())
}

pub fn assemble_hungry(
    surface: HungrySurface,
    side0: &SideConfiguration,
    side1: &SideConfiguration,
    sigma: TangleWord,
) -> Result<HungryForm> {
    let expected = surface.quadruple();
    if !side0.boundary().same_multiset(&expected) {
        return Err(GutsError::SurfaceMismatch {
            expected: expected.to_sphere().to_string(),
            found: side0.boundary().to_string(),
        });
    }
    if matches!(surface, HungrySurface::MirroredDisk(_))
        && *side1.shape() != SideShape::RegularNeighborhood
    {
        return Err(GutsError::HypothesisViolation(
            "a mirrored-disk surface is glued to its regular neighborhood".into(),
        ));
    }
    require_empty(side0)?;
    require_empty(side1)?;

    let gluing = GluingRecord::new(sigma);
    let carried = gluing.induced_permutation.apply(side0.boundary());
    if carried != *side1.boundary() {
        return Err(GutsError::LabelMismatch {
            expected: carried.to_string(),
            found: side1.boundary().to_string(),
        });
    }
    Ok(HungryForm {
        surface,
        boundary: *side0.boundary(),
        side0: side0.shape().clone(),
        side1: side1.shape().clone(),
        gluing,
    })
}
