use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Kind, RestrictedClass, Root, RootShape};
use crate::error::{Error, Result};

/// Cartan class of an irreducible classical type III symmetric space.
///
/// The restricted root system and the dimensions of the restricted root
/// spaces are derived from the class label.
///
/// | class | `G/K` | system | `e_i±e_j` | `e_i` | `2e_i` |
/// |-------|-------|--------|-----------|-------|--------|
/// | `AI(n)` | `SL(n,R)/SO(n)` | `A_{n-1}` | 1 | | |
/// | `AII(n)` | `SL(n,H)/Sp(n)` | `A_{n-1}` | 4 | | |
/// | `AIII(p,q)` | `SU(p,q)/S(U(p)×U(q))` | `C_p` / `BC_p` | 2 | `2(q-p)` | 1 |
/// | `CI(n)` | `Sp(n,R)/U(n)` | `C_n` | 1 | | 1 |
/// | `CII(p,q)` | `Sp(p,q)/Sp(p)×Sp(q)` | `C_p` / `BC_p` | 4 | `4(q-p)` | 3 |
/// | `DIII(n)`, n even | `SO*(2n)/U(n)` | `C_{n/2}` | 4 | | 1 |
/// | `DIII(n)`, n odd | `SO*(2n)/U(n)` | `BC_{(n-1)/2}` | 4 | 4 | 1 |
/// | `BDI(p,q)`, q > p | `SO_0(p,q)/SO(p)×SO(q)` | `B_p` | 1 | `q-p` | |
/// | `BDI(p,p)`, `DI(p)` | `SO_0(p,p)/SO(p)×SO(p)` | `D_p` | 1 | | |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanClass {
    AI(usize),
    AII(usize),
    AIII(usize, usize),
    CI(usize),
    CII(usize, usize),
    DIII(usize),
    BDI(usize, usize),
    DI(usize),
}

impl CartanClass {
    /// Validates the parameters. Low-rank labels that coincide with another
    /// class (`AIII(1,1)`, `AIII(2,2)`, `CII(1,1)`, `DIII(4)`) are accepted
    /// as they are and never canonicalized.
    pub fn validated(self) -> Result<Self> {
        use CartanClass::*;
        let ok = match self {
            AI(n) | AII(n) => n >= 2,
            AIII(p, q) | CII(p, q) => p >= 1 && q >= p,
            CI(n) => n >= 1,
            DIII(n) => n >= 3,
            BDI(p, q) => p >= 1 && q >= p && (q > p || p >= 2),
            DI(p) => p >= 3,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Parameter(format!("invalid Cartan class parameters {self}")))
        }
    }

    pub fn restricted_class(&self) -> RestrictedClass {
        use CartanClass::*;
        let (kind, rank) = match *self {
            AI(n) | AII(n) => (Kind::A, n - 1),
            AIII(p, q) | CII(p, q) => (if q > p { Kind::BC } else { Kind::C }, p),
            CI(n) => (Kind::C, n),
            DIII(n) if n % 2 == 0 => (Kind::C, n / 2),
            DIII(n) => (Kind::BC, n / 2),
            BDI(p, q) => (if q > p { Kind::B } else { Kind::D }, p),
            DI(p) => (Kind::D, p),
        };
        RestrictedClass::new(kind, rank).expect("validated Cartan class")
    }

    /// Dimension of `g_α` for a root of the given shape; 0 when no root of
    /// that shape occurs.
    pub fn shape_multiplicity(&self, shape: RootShape) -> u32 {
        use CartanClass::*;
        use RootShape::*;
        let d = |p: usize, q: usize| (q - p) as u32;
        match (*self, shape) {
            (AI(_), Pair) => 1,
            (AII(_), Pair) => 4,
            (AIII(..), Pair) => 2,
            (AIII(p, q), Single) => 2 * d(p, q),
            (AIII(..), Double) => 1,
            (CI(_), Pair | Double) => 1,
            (CII(..), Pair) => 4,
            (CII(p, q), Single) => 4 * d(p, q),
            (CII(..), Double) => 3,
            (DIII(_), Pair) => 4,
            (DIII(n), Single) if n % 2 == 1 => 4,
            (DIII(_), Double) => 1,
            (BDI(..) | DI(_), Pair) => 1,
            (BDI(p, q), Single) => d(p, q),
            _ => 0,
        }
    }

    /// `dim g_α` for a root (of either sign) of the restricted system.
    pub fn multiplicity(&self, r: &Root) -> Result<u32> {
        let rc = self.restricted_class();
        if !rc.contains(r) {
            return Err(Error::Domain(format!("{r} is not a root of {rc} ({self})")));
        }
        let shape = r.shape().expect("roots have a shape");
        Ok(self.shape_multiplicity(shape))
    }

    /// `dim p = rank + Σ_{α>0} dim g_α`.
    pub fn dim_p(&self) -> u64 {
        let rc = self.restricted_class();
        let roots = rc.positive_roots();
        rc.rank() as u64
            + roots
                .iter()
                .map(|r| u64::from(self.multiplicity(r).expect("own root")))
                .sum::<u64>()
    }
}

impl fmt::Display for CartanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CartanClass::*;
        match self {
            AI(n) => write!(f, "AI:{n}"),
            AII(n) => write!(f, "AII:{n}"),
            AIII(p, q) => write!(f, "AIII:{p},{q}"),
            CI(n) => write!(f, "CI:{n}"),
            CII(p, q) => write!(f, "CII:{p},{q}"),
            DIII(n) => write!(f, "DIII:{n}"),
            BDI(p, q) => write!(f, "BDI:{p},{q}"),
            DI(p) => write!(f, "DI:{p}"),
        }
    }
}

impl FromStr for CartanClass {
    type Err = Error;

    /// Parses `AI:4`, `BDI:3,4`, `DI:4`, ...
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Cartan class `{s}`"));
        let (label, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums = params
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        use CartanClass::*;
        let cc = match (label.trim().to_ascii_uppercase().as_str(), nums.as_slice()) {
            ("AI", [n]) => AI(*n),
            ("AII", [n]) => AII(*n),
            ("AIII", [p, q]) => AIII(*p, *q),
            ("CI", [n]) => CI(*n),
            ("CII", [p, q]) => CII(*p, *q),
            ("DIII", [n]) => DIII(*n),
            ("BDI" | "BI", [p, q]) => BDI(*p, *q),
            ("DI", [p]) => DI(*p),
            ("DI", [p, q]) => BDI(*p, *q),
            _ => return Err(bad()),
        };
        cc.validated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::subsystem_dim;

    fn e(v: &[i32]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn tabulated_multiplicities() {
        let cc: CartanClass = "AII:3".parse().unwrap();
        assert_eq!(cc.multiplicity(&e(&[1, -1, 0])).unwrap(), 4);
        let cc: CartanClass = "BDI:2,5".parse().unwrap();
        assert_eq!(cc.multiplicity(&e(&[1, 0])).unwrap(), 3);
        let cc: CartanClass = "CI:3".parse().unwrap();
        assert_eq!(cc.multiplicity(&e(&[2, 0, 0])).unwrap(), 1);
        assert!(cc.multiplicity(&e(&[1, 0, 0])).is_err());
    }

    #[test]
    fn shapes_present_iff_positive_multiplicity() {
        let classes = [
            "AI:4", "AII:3", "AIII:2,2", "AIII:3,3", "AIII:2,5", "CI:3", "CII:2,2", "CII:1,3",
            "DIII:6", "DIII:7", "DIII:3", "BDI:2,3", "BDI:3,3", "DI:4",
        ];
        for s in classes {
            let cc: CartanClass = s.parse().unwrap();
            let rc = cc.restricted_class();
            for shape in [RootShape::Pair, RootShape::Single, RootShape::Double] {
                let present = rc.roots().iter().any(|r| r.shape() == Some(shape));
                let expected = cc.shape_multiplicity(shape) > 0
                    && (shape != RootShape::Pair || rc.ambient_dim() >= 2);
                assert_eq!(present, expected, "{cc} {shape:?}");
            }
        }
    }

    #[test]
    fn dim_p_matches_group_dimensions() {
        // dim G - dim K for the underlying groups.
        let cases: &[(&str, u64)] = &[
            ("AI:4", 9),
            ("AII:3", 14),   // dim SL(3,H) - dim Sp(3) = 35 - 21
            ("AIII:2,3", 12), // 2pq
            ("AIII:3,3", 18),
            ("CI:3", 12),     // n(n+1)
            ("CII:2,3", 24),  // 4pq
            ("CII:2,2", 16),
            ("DIII:6", 30),   // n(n-1)
            ("DIII:5", 20),
            ("BDI:3,4", 12),  // pq
            ("DI:4", 16),
        ];
        for &(s, d) in cases {
            let cc: CartanClass = s.parse().unwrap();
            assert_eq!(cc.dim_p(), d, "{s}");
        }
    }

    #[test]
    fn subsystem_dims() {
        let ai: CartanClass = "AI:3".parse().unwrap();
        let aii: CartanClass = "AII:3".parse().unwrap();
        let a2 = ai.restricted_class().positive_roots();
        assert_eq!(subsystem_dim(&a2, &ai).unwrap(), 3);
        assert_eq!(subsystem_dim(&a2, &aii).unwrap(), 12);
        let bdi: CartanClass = "BDI:2,4".parse().unwrap();
        let roots = [e(&[1, 0]), e(&[1, -1])];
        assert_eq!(subsystem_dim(&roots, &bdi).unwrap(), 3);
        assert!(subsystem_dim(&[e(&[2, 0])], &bdi).is_err());
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!("DI:4".parse::<CartanClass>().unwrap(), CartanClass::DI(4));
        assert_eq!("BDI:3,3".parse::<CartanClass>().unwrap().restricted_class().to_string(), "D_3");
        assert!("DI:2".parse::<CartanClass>().is_err());
        assert!("BDI:1,1".parse::<CartanClass>().is_err());
        assert!("AI:1".parse::<CartanClass>().is_err());
        assert!("XX:1".parse::<CartanClass>().is_err());
        for s in ["AI:5", "AIII:2,3", "CII:3,3", "DIII:7", "BDI:2,5", "DI:5"] {
            assert_eq!(s.parse::<CartanClass>().unwrap().to_string(), s);
        }
    }
}
