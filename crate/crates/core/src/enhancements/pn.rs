//! Proof and disproof numbers for the objective "the root player wins".
//! Kept for explanations only; they never steer selection.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Saturating proof number where `u64::MAX` stands for infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProofNumber(pub u64);

impl ProofNumber {
    pub const ZERO: ProofNumber = ProofNumber(0);
    pub const ONE: ProofNumber = ProofNumber(1);
    pub const INFINITE: ProofNumber = ProofNumber(u64::MAX);

    pub fn is_infinite(self) -> bool {
        self == Self::INFINITE
    }

    fn plus(self, other: ProofNumber) -> ProofNumber {
        ProofNumber(self.0.saturating_add(other.0))
    }
}

impl std::fmt::Display for ProofNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for ProofNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_u64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for ProofNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(ProofNumber(n)),
            Raw::Text(t) if t == "inf" => Ok(ProofNumber::INFINITE),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("invalid proof number '{t}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PnStats {
    pub pn: ProofNumber,
    pub dn: ProofNumber,
}

impl PnStats {
    pub const LEAF: PnStats = PnStats {
        pn: ProofNumber::ONE,
        dn: ProofNumber::ONE,
    };
    pub const PROVED: PnStats = PnStats {
        pn: ProofNumber::ZERO,
        dn: ProofNumber::INFINITE,
    };
    pub const DISPROVED: PnStats = PnStats {
        pn: ProofNumber::INFINITE,
        dn: ProofNumber::ZERO,
    };

    /// Combines children; at OR nodes the objective player moves.
    /// `untried` unexpanded children each count as a fresh leaf.
    pub fn combine(is_or: bool, children: impl IntoIterator<Item = PnStats>, untried: usize) -> PnStats {
        let leaves = std::iter::repeat_n(PnStats::LEAF, untried);
        let mut min = ProofNumber::INFINITE;
        let mut sum = ProofNumber::ZERO;
        for c in children.into_iter().chain(leaves) {
            let (m, s) = if is_or { (c.pn, c.dn) } else { (c.dn, c.pn) };
            min = min.min(m);
            sum = sum.plus(s);
        }
        if is_or {
            PnStats { pn: min, dn: sum }
        } else {
            PnStats { pn: sum, dn: min }
        }
    }

    /// `dn / pn` when both are finite and non-zero.
    pub fn ratio(&self) -> Option<f64> {
        let finite = |x: ProofNumber| !x.is_infinite() && x.0 > 0;
        (finite(self.pn) && finite(self.dn)).then(|| self.dn.0 as f64 / self.pn.0 as f64)
    }
}
