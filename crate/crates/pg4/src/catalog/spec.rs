//! Group specifications and the textual spec-string format.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CatalogError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// The eleven tubical families, named by their left form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TubicalFamily {
    IxC,
    OxC,
    OxC2,
    TxC,
    TxC3,
    IxD,
    OxD,
    OxDbar4,
    OxDhalf,
    OxD6,
    TxD,
}

impl TubicalFamily {
    pub const ALL: [TubicalFamily; 11] = [
        TubicalFamily::IxC,
        TubicalFamily::OxC,
        TubicalFamily::OxC2,
        TubicalFamily::TxC,
        TubicalFamily::TxC3,
        TubicalFamily::IxD,
        TubicalFamily::OxD,
        TubicalFamily::OxDbar4,
        TubicalFamily::OxDhalf,
        TubicalFamily::OxD6,
        TubicalFamily::TxD,
    ];

    /// Order is `factor · n`.
    pub fn order_factor(self) -> u64 {
        use TubicalFamily::*;
        match self {
            IxC => 120,
            OxC | OxC2 => 48,
            TxC | TxC3 => 24,
            IxD => 240,
            OxD | OxDbar4 => 96,
            OxDhalf | OxD6 | TxD => 48,
        }
    }

    pub fn min_n(self) -> u64 {
        use TubicalFamily::*;
        match self {
            IxD | OxD | OxDbar4 | OxDhalf | TxD => 2,
            _ => 1,
        }
    }

    /// `I`, `O` or `T`: the polyhedral factor.
    pub fn polyhedral_letter(self) -> &'static str {
        self.parts().1
    }

    /// `(prefix, polyhedral letter, cyclic/dihedral token)`.
    fn parts(self) -> (&'static str, &'static str, &'static str) {
        use TubicalFamily::*;
        match self {
            IxC => ("+-", "I", "C"),
            OxC => ("+-", "O", "C"),
            OxC2 => ("+-1/2", "O", "C2"),
            TxC => ("+-", "T", "C"),
            TxC3 => ("+-1/3", "T", "C3"),
            IxD => ("+-", "I", "D"),
            OxD => ("+-", "O", "D"),
            OxDbar4 => ("+-1/2", "O", "Dbar4"),
            OxDhalf => ("+-1/2", "O", "D"),
            OxD6 => ("+-1/6", "O", "D6"),
            TxD => ("+-", "T", "D"),
        }
    }

    fn from_parts(prefix: &str, poly: &str, other: &str) -> Option<TubicalFamily> {
        TubicalFamily::ALL.into_iter().find(|f| f.parts() == (prefix, poly, other)).or_else(|| {
            // "C2n" style tokens written with an explicit n.
            let other = other.trim_end_matches('n');
            TubicalFamily::ALL.into_iter().find(|f| f.parts() == (prefix, poly, other))
        })
    }

    /// Bracket text such as `+-1/2[OxC2]`, or `+-1/2[C2xO]` on the right.
    pub fn label(self, side: Side) -> String {
        let (p, a, b) = self.parts();
        match side {
            Side::Left => format!("{}[{}x{}]", p, a, b),
            Side::Right => format!("{}[{}x{}]", p, b, a),
        }
    }

    /// Conventional name with the parameter substituted, e.g. `±½[O×C_6]`.
    pub fn pretty(self, side: Side, n: u64) -> String {
        use TubicalFamily::*;
        let (p, a, _) = self.parts();
        let other = match self {
            IxC | OxC | TxC => format!("C{}", n),
            OxC2 => format!("C{}", 2 * n),
            TxC3 => format!("C{}", 3 * n),
            IxD | OxD | OxDhalf | TxD => format!("D{}", 2 * n),
            OxDbar4 => format!("D̄{}", 4 * n),
            OxD6 => format!("D{}", 6 * n),
        };
        let p = p.replace("+-", "±");
        match side {
            Side::Left => format!("{}[{}×{}]", p, a, other),
            Side::Right => format!("{}[{}×{}]", p, other, a),
        }
    }
}

/// The 25 toroidal families. Wallpaper subtypes are flattened into the
/// variant name; the torus direction group is given by [`TorKind::symbol`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TorKind {
    Trans,
    Flip,
    ReflPm,
    ReflPg,
    ReflCm,
    SwapPm,
    SwapPg,
    SwapCm,
    BswapPm,
    BswapPg,
    BswapCm,
    XP2mm,
    XP2mg,
    XP2gm,
    XP2gg,
    XC2mm,
    PlusP2mm,
    PlusP2mg,
    PlusP2gg,
    PlusC2mm,
    SwapTurn,
    StarP4mmU,
    StarP4gmU,
    StarP4mmS,
    StarP4gmS,
}

impl TorKind {
    pub const ALL: [TorKind; 25] = [
        TorKind::Trans,
        TorKind::Flip,
        TorKind::ReflPm,
        TorKind::ReflPg,
        TorKind::ReflCm,
        TorKind::SwapPm,
        TorKind::SwapPg,
        TorKind::SwapCm,
        TorKind::BswapPm,
        TorKind::BswapPg,
        TorKind::BswapCm,
        TorKind::XP2mm,
        TorKind::XP2mg,
        TorKind::XP2gm,
        TorKind::XP2gg,
        TorKind::XC2mm,
        TorKind::PlusP2mm,
        TorKind::PlusP2mg,
        TorKind::PlusP2gg,
        TorKind::PlusC2mm,
        TorKind::SwapTurn,
        TorKind::StarP4mmU,
        TorKind::StarP4gmU,
        TorKind::StarP4mmS,
        TorKind::StarP4gmS,
    ];

    pub fn symbol(self) -> char {
        use TorKind::*;
        match self {
            Trans => '1',
            Flip => '.',
            ReflPm | ReflPg | ReflCm => '|',
            SwapPm | SwapPg | SwapCm => '/',
            BswapPm | BswapPg | BswapCm => '\\',
            XP2mm | XP2mg | XP2gm | XP2gg | XC2mm => 'X',
            PlusP2mm | PlusP2mg | PlusP2gg | PlusC2mm => '+',
            SwapTurn => 'L',
            StarP4mmU | StarP4gmU | StarP4mmS | StarP4gmS => '*',
        }
    }

    pub fn subtype(self) -> Option<&'static str> {
        use TorKind::*;
        Some(match self {
            Trans | Flip | SwapTurn => return None,
            ReflPm | SwapPm | BswapPm => "pm",
            ReflPg | SwapPg | BswapPg => "pg",
            ReflCm | SwapCm | BswapCm => "cm",
            XP2mm | PlusP2mm => "p2mm",
            XP2mg | PlusP2mg => "p2mg",
            XP2gm => "p2gm",
            XP2gg | PlusP2gg => "p2gg",
            XC2mm | PlusC2mm => "c2mm",
            StarP4mmU => "p4mmU",
            StarP4gmU => "p4gmU",
            StarP4mmS => "p4mmS",
            StarP4gmS => "p4gmS",
        })
    }

    pub fn from_parts(symbol: char, subtype: Option<&str>) -> Option<TorKind> {
        TorKind::ALL.into_iter().find(|k| k.symbol() == symbol && k.subtype() == subtype)
    }

    pub fn is_chiral(self) -> bool {
        matches!(
            self,
            TorKind::Trans
                | TorKind::Flip
                | TorKind::SwapPm
                | TorKind::SwapPg
                | TorKind::SwapCm
                | TorKind::BswapPm
                | TorKind::BswapPg
                | TorKind::BswapCm
                | TorKind::XP2mm
                | TorKind::XP2mg
                | TorKind::XP2gm
                | TorKind::XP2gg
                | TorKind::XC2mm
        )
    }

    pub fn params(self) -> ParamShape {
        use TorKind::*;
        match self {
            Trans | Flip => ParamShape::Mns,
            SwapTurn => ParamShape::Ab,
            StarP4mmU | StarP4gmU | StarP4mmS | StarP4gmS => ParamShape::N,
            _ => ParamShape::Mn,
        }
    }

    /// Subscripts are printed as `2m, 2n` for these families.
    pub fn doubled_subscripts(self) -> bool {
        use TorKind::*;
        matches!(self, SwapPm | SwapPg | BswapPm | BswapPg | XP2mm | XP2mg | XP2gm | XP2gg)
    }

    /// Centered lattices need `m ≡ n (mod 2)`.
    pub fn needs_parity(self) -> bool {
        matches!(self, TorKind::SwapCm | TorKind::BswapCm | TorKind::XC2mm)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamShape {
    Mns,
    Mn,
    Ab,
    N,
}

/// A toroidal group. `m, n, s` hold the table parameters; for the swapturn
/// family `m = a, n = b`, and the full torus groups use only `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ToroidalSpec {
    pub kind: TorKind,
    pub m: i64,
    pub n: i64,
    pub s: i64,
}

impl ToroidalSpec {
    pub fn new(kind: TorKind, m: i64, n: i64, s: i64) -> ToroidalSpec {
        let (m, s) = match kind.params() {
            ParamShape::Mns => (m, s),
            ParamShape::N => (0, 0),
            _ => (m, 0),
        };
        ToroidalSpec { kind, m, n, s }
    }

    pub fn mn(kind: TorKind, m: i64, n: i64) -> ToroidalSpec {
        ToroidalSpec::new(kind, m, n, 0)
    }

    pub fn order(&self) -> u64 {
        use TorKind::*;
        let (m, n) = (self.m as u64, self.n as u64);
        match self.kind {
            Trans => m * n,
            Flip | ReflPm | ReflPg | SwapCm | BswapCm => 2 * m * n,
            ReflCm | SwapPm | SwapPg | BswapPm | BswapPg | XC2mm => 4 * m * n,
            PlusP2mm | PlusP2mg | PlusP2gg => 4 * m * n,
            XP2mm | XP2mg | XP2gm | XP2gg | PlusC2mm => 8 * m * n,
            SwapTurn => 4 * (m * m + n * n),
            StarP4mmU | StarP4gmU => 8 * n * n,
            StarP4mmS | StarP4gmS => 16 * n * n,
        }
    }

    /// Parameters for which the generators make sense, before duplicates
    /// are excluded.
    pub fn check_natural(&self) -> Result<(), CatalogError> {
        let bad = |why: &str| Err(CatalogError::Constraint(format!("{}: {}", self, why)));
        match self.kind.params() {
            ParamShape::Mns | ParamShape::Mn => {
                if self.m < 1 || self.n < 1 {
                    return bad("m and n must be positive");
                }
                if self.kind.needs_parity() && (self.m - self.n) % 2 != 0 {
                    return bad("m and n must have the same parity");
                }
            }
            ParamShape::Ab => {
                if self.m < 0 || self.n < 0 || (self.m == 0 && self.n == 0) {
                    return bad("a and b must be non-negative and not both zero");
                }
            }
            ParamShape::N => {
                if self.n < 1 {
                    return bad("n must be positive");
                }
            }
        }
        Ok(())
    }

    /// Catalog constraints: each group appears exactly once.
    pub fn check_catalog(&self) -> Result<(), CatalogError> {
        self.check_natural()?;
        use TorKind::*;
        let (m, n, s) = (self.m, self.n, self.s);
        let ok = match self.kind {
            Trans => s_in_range(m, n, s),
            Flip => s_in_range(m, n, s) && (m, n) != (1, 1) && (m, n) != (2, 1),
            BswapPm | SwapPm => m >= 2 && n >= 2,
            BswapPg => m >= 2,
            SwapPg => n >= 2,
            BswapCm => m >= 3 && n >= 2,
            SwapCm => m >= 2 && n >= 3,
            XP2mm | XP2mg | XP2gm | XP2gg => m >= 2 && n >= 2,
            XC2mm => m >= 3 && n >= 3,
            ReflPm | ReflPg | ReflCm => true,
            PlusP2mm | PlusP2gg | PlusC2mm => m >= n && (m, n) != (1, 1),
            PlusP2mg => (m, n) != (1, 1),
            SwapTurn => m >= n && m >= 2 && (m, n) != (2, 0),
            StarP4mmU | StarP4gmU => n >= 3,
            StarP4mmS | StarP4gmS => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(CatalogError::Constraint(format!("{} is outside the catalog range", self)))
        }
    }

    pub fn in_catalog(&self) -> bool {
        self.check_catalog().is_ok()
    }

    /// Conventional name, e.g. `⊙X^c2mm_{5,5}` or `⊙1^(1)_{2,5}`.
    pub fn pretty(&self) -> String {
        let sup = match (self.kind.subtype(), self.kind.params()) {
            (Some(t), _) => format!("^{}", t),
            (None, ParamShape::Mns) => format!("^({})", self.s),
            _ => String::new(),
        };
        let sub = match self.kind.params() {
            ParamShape::N => format!("{}", self.n),
            _ if self.kind.doubled_subscripts() => format!("{},{}", 2 * self.m, 2 * self.n),
            _ => format!("{},{}", self.m, self.n),
        };
        format!("⊙{}{}_{{{}}}", self.kind.symbol(), sup, sub)
    }
}

/// `−m/2 ≤ s ≤ (n−m)/2`.
pub fn s_in_range(m: i64, n: i64, s: i64) -> bool {
    -m <= 2 * s && 2 * s <= n - m
}

impl fmt::Display for ToroidalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tor:{}", self.kind.symbol())?;
        if let Some(t) = self.kind.subtype() {
            write!(f, "/{}", t)?;
        }
        match self.kind.params() {
            ParamShape::Mns => write!(f, ":m={},n={},s={}", self.m, self.n, self.s),
            ParamShape::Mn => write!(f, ":m={},n={}", self.m, self.n),
            ParamShape::Ab => write!(f, ":a={},b={}", self.m, self.n),
            ParamShape::N => write!(f, ":n={}", self.n),
        }
    }
}

/// Three-dimensional polyhedral groups used by the axial constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group3 {
    PlusI,
    PmI,
    PlusO,
    PmO,
    TO,
    PlusT,
    PmT,
}

impl Group3 {
    pub const ALL: [Group3; 7] =
        [Group3::PmI, Group3::PlusI, Group3::PmO, Group3::PlusO, Group3::TO, Group3::PmT, Group3::PlusT];

    pub fn name(self) -> &'static str {
        match self {
            Group3::PlusI => "+I",
            Group3::PmI => "+-I",
            Group3::PlusO => "+O",
            Group3::PmO => "+-O",
            Group3::TO => "TO",
            Group3::PlusT => "+T",
            Group3::PmT => "+-T",
        }
    }

    pub fn order(self) -> u64 {
        match self {
            Group3::PlusI => 60,
            Group3::PmI => 120,
            Group3::PmO => 48,
            Group3::PlusO | Group3::TO | Group3::PmT => 24,
            Group3::PlusT => 12,
        }
    }

    pub fn is_rotation_group(self) -> bool {
        matches!(self, Group3::PlusI | Group3::PlusO | Group3::PlusT)
    }

    fn parse(s: &str) -> Option<Group3> {
        let s = s.replace('±', "+-");
        Group3::ALL.into_iter().find(|g| g.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxialSpec {
    Pyramidal(Group3),
    Prismatic(Group3),
    /// `H` in `G3`, where `H` has index 2.
    Hybrid(Group3, Group3),
}

impl AxialSpec {
    pub const HYBRIDS: [(Group3, Group3); 7] = [
        (Group3::PlusI, Group3::PmI),
        (Group3::PmT, Group3::PmO),
        (Group3::PlusO, Group3::PmO),
        (Group3::TO, Group3::PmO),
        (Group3::PlusT, Group3::PmT),
        (Group3::PlusT, Group3::PlusO),
        (Group3::PlusT, Group3::TO),
    ];

    pub fn all() -> Vec<AxialSpec> {
        let mut v: Vec<AxialSpec> = Group3::ALL.iter().map(|g| AxialSpec::Pyramidal(*g)).collect();
        v.extend(Group3::ALL.iter().map(|g| AxialSpec::Prismatic(*g)));
        v.extend(AxialSpec::HYBRIDS.iter().map(|(h, g)| AxialSpec::Hybrid(*h, *g)));
        v
    }

    pub fn order(&self) -> u64 {
        match self {
            AxialSpec::Pyramidal(g) => g.order(),
            AxialSpec::Prismatic(g) => 2 * g.order(),
            AxialSpec::Hybrid(_, g) => g.order(),
        }
    }
}

impl fmt::Display for AxialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxialSpec::Pyramidal(g) => write!(f, "axial:pyramid:{}", g.name()),
            AxialSpec::Prismatic(g) => write!(f, "axial:prism:{}", g.name()),
            AxialSpec::Hybrid(h, g) => write!(f, "axial:hybrid:{}/{}", h.name(), g.name()),
        }
    }
}

/// The 25 polyhedral groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PolyhedralId {
    IxI,
    IxO,
    OxI,
    IxT,
    TxI,
    OxO,
    OxOhalf,
    OxOsixth,
    OxT,
    TxO,
    TxT,
    TxTthird,
    IxIbarPm,
    IxIbarPlus,
    IxI2,
    IxIbarPm2,
    IxIbarPlus21,
    IxIbarPlus23,
    OxO2,
    OxOhalf2,
    OxOhalf2bar,
    OxOsixth2,
    TxT2,
    TxTthird2,
    TxTthird2bar,
}

impl PolyhedralId {
    pub const ALL: [PolyhedralId; 25] = [
        PolyhedralId::IxI,
        PolyhedralId::IxO,
        PolyhedralId::OxI,
        PolyhedralId::IxT,
        PolyhedralId::TxI,
        PolyhedralId::OxO,
        PolyhedralId::OxOhalf,
        PolyhedralId::OxOsixth,
        PolyhedralId::OxT,
        PolyhedralId::TxO,
        PolyhedralId::TxT,
        PolyhedralId::TxTthird,
        PolyhedralId::IxIbarPm,
        PolyhedralId::IxIbarPlus,
        PolyhedralId::IxI2,
        PolyhedralId::IxIbarPm2,
        PolyhedralId::IxIbarPlus21,
        PolyhedralId::IxIbarPlus23,
        PolyhedralId::OxO2,
        PolyhedralId::OxOhalf2,
        PolyhedralId::OxOhalf2bar,
        PolyhedralId::OxOsixth2,
        PolyhedralId::TxT2,
        PolyhedralId::TxTthird2,
        PolyhedralId::TxTthird2bar,
    ];

    pub fn name(self) -> &'static str {
        use PolyhedralId::*;
        match self {
            IxI => "+-[IxI]",
            IxO => "+-[IxO]",
            OxI => "+-[OxI]",
            IxT => "+-[IxT]",
            TxI => "+-[TxI]",
            OxO => "+-[OxO]",
            OxOhalf => "+-1/2[OxO]",
            OxOsixth => "+-1/6[OxO]",
            OxT => "+-[OxT]",
            TxO => "+-[TxO]",
            TxT => "+-[TxT]",
            TxTthird => "+-1/3[TxT]",
            IxIbarPm => "+-1/60[IxIbar]",
            IxIbarPlus => "+1/60[IxIbar]",
            IxI2 => "+-[IxI].2",
            IxIbarPm2 => "+-1/60[IxIbar].2",
            IxIbarPlus21 => "+1/60[IxIbar].2_1",
            IxIbarPlus23 => "+1/60[IxIbar].2_3",
            OxO2 => "+-[OxO].2",
            OxOhalf2 => "+-1/2[OxO].2",
            OxOhalf2bar => "+-1/2[OxO].2bar",
            OxOsixth2 => "+-1/6[OxO].2",
            TxT2 => "+-[TxT].2",
            TxTthird2 => "+-1/3[TxT].2",
            TxTthird2bar => "+-1/3[TxT].2bar",
        }
    }

    /// Coxeter-style name.
    pub fn coxeter(self) -> &'static str {
        use PolyhedralId::*;
        match self {
            IxI => "[3,3,5]+",
            IxO => "[[3,3,5]_1/5L+]",
            OxI => "[[3,3,5]_1/5R+]",
            IxT => "[3,3,5]_1/5L+",
            TxI => "[3,3,5]_1/5R+",
            OxO => "[[3,4,3]]+",
            OxOhalf => "[3,4,3]+",
            OxOsixth => "[3,3,4]+",
            OxT => "[[+3,4,3+]]_L",
            TxO => "[[+3,4,3+]]_R",
            TxT => "[+3,4,3+]",
            TxTthird => "[+3,3,4+]",
            IxIbarPm => "[[3,3,3]]+",
            IxIbarPlus => "[3,3,3]+",
            IxI2 => "[3,3,5]",
            IxIbarPm2 => "[[3,3,3]]",
            IxIbarPlus21 => "[3,3,3]",
            IxIbarPlus23 => "[[3,3,3]+]",
            OxO2 => "[[3,4,3]]",
            OxOhalf2 => "[3,4,3]",
            OxOhalf2bar => "[[3,4,3]+]",
            OxOsixth2 => "[3,3,4]",
            TxT2 => "[3,4,3+]",
            TxTthird2 => "[+3,3,4]",
            TxTthird2bar => "[3,3,4+]",
        }
    }

    pub fn order(self) -> u64 {
        use PolyhedralId::*;
        match self {
            IxI => 7200,
            IxO | OxI => 2880,
            IxT | TxI => 1440,
            OxO => 1152,
            OxOhalf | OxT | TxO => 576,
            OxOsixth => 192,
            TxT => 288,
            TxTthird => 96,
            IxIbarPm => 120,
            IxIbarPlus => 60,
            IxI2 => 14400,
            IxIbarPm2 => 240,
            IxIbarPlus21 | IxIbarPlus23 => 120,
            OxO2 => 2304,
            OxOhalf2 | OxOhalf2bar => 1152,
            TxT2 => 576,
            OxOsixth2 => 384,
            TxTthird2 | TxTthird2bar => 192,
        }
    }

    pub fn is_chiral(self) -> bool {
        (self as usize) < 14
    }

    pub fn parse(s: &str) -> Option<PolyhedralId> {
        let s = s.replace('±', "+-").replace('×', "x");
        PolyhedralId::ALL.into_iter().find(|p| p.name() == s || p.coxeter() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupSpec {
    Tubical { family: TubicalFamily, side: Side, n: u64 },
    Toroidal(ToroidalSpec),
    Polyhedral(PolyhedralId),
    Axial(AxialSpec),
}

impl GroupSpec {
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Tubical { family, n, .. } => family.order_factor() * n,
            GroupSpec::Toroidal(t) => t.order(),
            GroupSpec::Polyhedral(p) => p.order(),
            GroupSpec::Axial(a) => a.order(),
        }
    }

    pub fn is_chiral(&self) -> bool {
        match self {
            GroupSpec::Tubical { .. } => true,
            GroupSpec::Toroidal(t) => t.kind.is_chiral(),
            GroupSpec::Polyhedral(p) => p.is_chiral(),
            GroupSpec::Axial(a) => match a {
                AxialSpec::Pyramidal(g) => g.is_rotation_group(),
                AxialSpec::Prismatic(_) => false,
                // Elements of G3 outside H are paired with −x4, so they must
                // be improper for the product to be a rotation.
                AxialSpec::Hybrid(h, g) => h.is_rotation_group() && !g.is_rotation_group(),
            },
        }
    }

    /// Conventional display name.
    pub fn pretty(&self) -> String {
        match self {
            GroupSpec::Tubical { family, side, n } => family.pretty(*side, *n),
            GroupSpec::Toroidal(t) => t.pretty(),
            GroupSpec::Polyhedral(p) => p.name().replace("+-", "±"),
            GroupSpec::Axial(a) => a.to_string(),
        }
    }

    /// Natural-parameter check for building.
    pub fn check_natural(&self) -> Result<(), CatalogError> {
        match self {
            GroupSpec::Tubical { n, .. } if *n < 1 => Err(CatalogError::Constraint(format!("{}: n must be positive", self))),
            GroupSpec::Toroidal(t) => t.check_natural(),
            GroupSpec::Axial(AxialSpec::Hybrid(h, g)) if !AxialSpec::HYBRIDS.contains(&(*h, *g)) => {
                Err(CatalogError::Constraint(format!("{} is not an index-2 pair", self)))
            }
            _ => Ok(()),
        }
    }

    /// Full catalog constraints.
    pub fn check_catalog(&self) -> Result<(), CatalogError> {
        self.check_natural()?;
        match self {
            GroupSpec::Tubical { family, n, .. } if *n < family.min_n() => {
                Err(CatalogError::Constraint(format!("{} needs n >= {}", self, family.min_n())))
            }
            GroupSpec::Toroidal(t) => t.check_catalog(),
            _ => Ok(()),
        }
    }

    pub fn in_catalog(&self) -> bool {
        self.check_catalog().is_ok()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Tubical { family, side, n } => write!(f, "tub:{}:n={}", family.label(*side), n),
            GroupSpec::Toroidal(t) => write!(f, "{}", t),
            GroupSpec::Polyhedral(p) => write!(f, "poly:{}", p.name()),
            GroupSpec::Axial(a) => write!(f, "{}", a),
        }
    }
}

fn parse_params(s: &str) -> Result<Vec<(String, i64)>, CatalogError> {
    let err = || CatalogError::Parse(format!("bad parameter list {:?}", s));
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(err)?;
            let v: i64 = v.trim().parse().map_err(|_| err())?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn take(params: &[(String, i64)], names: &[&str], src: &str) -> Result<Vec<i64>, CatalogError> {
    if params.len() != names.len() {
        return Err(CatalogError::Parse(format!("{:?} expects parameters {}", src, names.join(","))));
    }
    names
        .iter()
        .map(|n| {
            params
                .iter()
                .find(|(k, _)| k == n)
                .map(|(_, v)| *v)
                .ok_or_else(|| CatalogError::Parse(format!("{:?} is missing parameter {}", src, n)))
        })
        .collect()
}

fn parse_toroidal(body: &str, src: &str) -> Result<ToroidalSpec, CatalogError> {
    let mut chars = body.chars();
    let symbol = chars.next().ok_or_else(|| CatalogError::Parse(format!("empty family in {:?}", src)))?;
    let rest = chars.as_str();
    let (subtype, params) = if let Some(r) = rest.strip_prefix('/') {
        let (t, p) = r.split_once(':').unwrap_or((r, ""));
        (Some(t), p)
    } else if let Some(p) = rest.strip_prefix(':') {
        (None, p)
    } else if rest.is_empty() {
        (None, "")
    } else {
        return Err(CatalogError::Parse(format!("unexpected {:?} in {:?}", rest, src)));
    };
    let kind = TorKind::from_parts(symbol, subtype)
        .ok_or_else(|| CatalogError::Parse(format!("unknown toroidal family in {:?}", src)))?;
    let ps = parse_params(params)?;
    let spec = match kind.params() {
        ParamShape::Mns => {
            let v = take(&ps, &["m", "n", "s"], src)?;
            ToroidalSpec::new(kind, v[0], v[1], v[2])
        }
        ParamShape::Mn => {
            let v = take(&ps, &["m", "n"], src)?;
            ToroidalSpec::mn(kind, v[0], v[1])
        }
        ParamShape::Ab => {
            let v = take(&ps, &["a", "b"], src)?;
            ToroidalSpec::mn(kind, v[0], v[1])
        }
        ParamShape::N => {
            let v = take(&ps, &["n"], src)?;
            ToroidalSpec::new(kind, 0, v[0], 0)
        }
    };
    Ok(spec)
}

fn parse_tubical(body: &str, src: &str) -> Result<GroupSpec, CatalogError> {
    let err = || CatalogError::Parse(format!("unknown tubical family in {:?}", src));
    let body = body.replace('±', "+-").replace('×', "x");
    let (fam, params) = body.rsplit_once(':').ok_or_else(err)?;
    let open = fam.find('[').ok_or_else(err)?;
    let prefix = &fam[..open];
    let inner = fam[open + 1..].strip_suffix(']').ok_or_else(err)?;
    let (a, b) = inner.split_once('x').ok_or_else(err)?;
    let is_poly = |t: &str| matches!(t, "I" | "O" | "T");
    let (side, poly, other) = if is_poly(a) && !is_poly(b) {
        (Side::Left, a, b)
    } else if is_poly(b) && !is_poly(a) {
        (Side::Right, b, a)
    } else {
        return Err(err());
    };
    let family = TubicalFamily::from_parts(prefix, poly, other).ok_or_else(err)?;
    let v = take(&parse_params(params)?, &["n"], src)?;
    if v[0] < 1 {
        return Err(CatalogError::Constraint(format!("{}: n must be positive", src)));
    }
    Ok(GroupSpec::Tubical { family, side, n: v[0] as u64 })
}

fn parse_axial(body: &str, src: &str) -> Result<AxialSpec, CatalogError> {
    let err = || CatalogError::Parse(format!("unknown axial group {:?}", src));
    let (kind, g) = body.split_once(':').ok_or_else(err)?;
    Ok(match kind {
        "pyr" | "pyramid" | "pyramidal" => AxialSpec::Pyramidal(Group3::parse(g).ok_or_else(err)?),
        "prism" | "prismatic" => AxialSpec::Prismatic(Group3::parse(g).ok_or_else(err)?),
        "hybrid" => {
            let (h, g) = g.split_once('/').ok_or_else(err)?;
            let pair = (Group3::parse(h).ok_or_else(err)?, Group3::parse(g).ok_or_else(err)?);
            if !AxialSpec::HYBRIDS.contains(&pair) {
                return Err(CatalogError::Constraint(format!("{:?}: not an index-2 pair", src)));
            }
            AxialSpec::Hybrid(pair.0, pair.1)
        }
        _ => return Err(err()),
    })
}

impl FromStr for GroupSpec {
    type Err = CatalogError;

    fn from_str(src: &str) -> Result<GroupSpec, CatalogError> {
        let s = src.trim();
        let (head, body) = s.split_once(':').ok_or_else(|| CatalogError::Parse(format!("missing class prefix in {:?}", src)))?;
        match head {
            "tor" => Ok(GroupSpec::Toroidal(parse_toroidal(body, src)?)),
            "tub" => parse_tubical(body, src),
            "poly" => PolyhedralId::parse(body)
                .map(GroupSpec::Polyhedral)
                .ok_or_else(|| CatalogError::Parse(format!("unknown polyhedral group {:?}", src))),
            "axial" => Ok(GroupSpec::Axial(parse_axial(body, src)?)),
            _ => Err(CatalogError::Parse(format!("unknown class {:?} in {:?}", head, src))),
        }
    }
}

impl FromStr for ToroidalSpec {
    type Err = CatalogError;

    fn from_str(src: &str) -> Result<ToroidalSpec, CatalogError> {
        match src.parse::<GroupSpec>()? {
            GroupSpec::Toroidal(t) => Ok(t),
            _ => Err(CatalogError::Parse(format!("{:?} is not a toroidal spec", src))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in [
            "tub:+-[IxC]:n=5",
            "tub:+-1/2[C2xO]:n=3",
            "tub:+-1/2[OxDbar4]:n=2",
            "tor:1:m=2,n=5,s=1",
            "tor:L:a=4,b=3",
            "tor:X/c2mm:m=5,n=5",
            "tor:|/pg:m=2,n=4",
            "tor://pm:m=2,n=3",
            "tor:\\/cm:m=3,n=5",
            "tor:*/p4gmS:n=2",
            "poly:+-[IxI]",
            "poly:+1/60[IxIbar].2_3",
            "axial:prism:+I",
            "axial:hybrid:+T/TO",
        ] {
            let g: GroupSpec = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
    }

    #[test]
    fn parse_errors() {
        assert!("tor:Q:m=1,n=1".parse::<GroupSpec>().is_err());
        assert!("tor:1:m=2,n=5".parse::<GroupSpec>().is_err());
        assert!("nope".parse::<GroupSpec>().is_err());
        assert!("axial:hybrid:+I/+O".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn catalog_constraints() {
        let t = |s: &str| s.parse::<GroupSpec>().unwrap().in_catalog();
        assert!(t("tor:1:m=2,n=5,s=1"));
        assert!(!t("tor:1:m=2,n=5,s=2"));
        assert!(!t("tor:.:m=1,n=1,s=0"));
        assert!(!t("tor:L:a=2,b=0"));
        assert!(t("tor:L:a=2,b=1"));
        assert!(!t("tor:X/c2mm:m=1,n=5"));
        assert!(!t("tub:+-[IxD]:n=1"));
    }
}
