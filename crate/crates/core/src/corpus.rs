//! Seeded test polynomials whose zero structure is known by construction.
//!
//! Every polynomial is a product of real linear factors and irreducible real
//! quadratics, so `(Z_R, Z_C)` is known without calling the zero counter.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{int, ratio, Rational};
use crate::zeros::{Degree, ZeroCount};

/// Name and version of the random generator behind every corpus. Reports
/// echo it together with the seed.
pub const GENERATOR: &str = "chacha8-v1";

/// Target zero structure of the generated polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mix {
    /// Number of conjugate pairs uniform in `0..=deg/2`.
    Mixed,
    /// Only real zeros.
    RealRooted,
    /// As many conjugate pairs as the degree allows.
    MostlyNonReal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub count: usize,
    pub max_degree: usize,
    /// Real zeros and the real parts of non-real zeros are drawn from here.
    #[serde(with = "range_str")]
    pub root_range: (Rational, Rational),
    pub seed: u64,
    pub mix: Mix,
}

impl CorpusSpec {
    /// Mixed corpus with zeros drawn from `[-3, 3]`.
    pub fn new(count: usize, max_degree: usize, seed: u64) -> Result<Self> {
        let spec = CorpusSpec {
            count,
            max_degree,
            root_range: (int(-3), int(3)),
            seed,
            mix: Mix::Mixed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_mix(mut self, mix: Mix) -> Self {
        self.mix = mix;
        self
    }

    pub fn with_root_range(mut self, lo: Rational, hi: Rational) -> Result<Self> {
        self.root_range = (lo, hi);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::ParameterOutOfDomain(
                "corpus count must be at least 1".into(),
            ));
        }
        if self.max_degree == 0 {
            return Err(Error::ParameterOutOfDomain(
                "max degree must be at least 1".into(),
            ));
        }
        if self.root_range.0 >= self.root_range.1 {
            return Err(Error::EmptyInterval);
        }
        Ok(())
    }

    /// The corpus, deterministic in every field of the spec.
    pub fn generate(&self) -> Vec<CorpusPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|index| {
                let degree = rng.gen_range(1..=self.max_degree);
                let pairs = match self.mix {
                    Mix::Mixed => rng.gen_range(0..=degree / 2),
                    Mix::RealRooted => 0,
                    Mix::MostlyNonReal => degree / 2,
                };
                let (poly, expected) = build(&mut rng, degree - 2 * pairs, pairs, &self.root_range);
                CorpusPoly {
                    index,
                    poly,
                    expected,
                }
            })
            .collect()
    }
}

/// One corpus member and the zero counts it was built to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusPoly {
    pub index: usize,
    pub poly: Poly,
    pub expected: ZeroCount,
}

const DENOMS: [i64; 4] = [1, 2, 3, 4];
const NON_SQUARES: [i64; 5] = [2, 3, 5, 6, 7];

fn random_point(rng: &mut ChaCha8Rng, range: &(Rational, Rational)) -> Rational {
    use num_traits::ToPrimitive;
    let den = *DENOMS.choose(rng).expect("nonempty");
    let scaled = |r: &Rational| r * int(den);
    let lo = scaled(&range.0)
        .ceil()
        .to_integer()
        .to_i64()
        .unwrap_or(-1_000);
    let hi = scaled(&range.1)
        .floor()
        .to_integer()
        .to_i64()
        .unwrap_or(1_000);
    if lo > hi {
        return (&range.0 + &range.1) / int(2);
    }
    ratio(rng.gen_range(lo..=hi), den)
}

/// Builds `c * Π(linear) * Π(quadratic)` with exactly `real` real zeros and
/// `pairs` conjugate pairs, all counted with multiplicity.
fn build(
    rng: &mut ChaCha8Rng,
    real: usize,
    pairs: usize,
    range: &(Rational, Rational),
) -> (Poly, ZeroCount) {
    let one = Rational::from_integer(1.into());
    let mut factors: Vec<Poly> = Vec::new();

    let mut remaining = real;
    let mut roots: Vec<Rational> = Vec::new();
    while remaining > 0 {
        if remaining >= 2 && rng.gen_ratio(1, 6) {
            // x² - s: two irrational real zeros ±√s
            let s = *NON_SQUARES.choose(rng).expect("nonempty");
            let den = *DENOMS.choose(rng).expect("nonempty");
            factors.push(Poly::new(vec![ratio(-s, den * den), int(0), one.clone()]));
            remaining -= 2;
            continue;
        }
        let root = if !roots.is_empty() && rng.gen_ratio(1, 4) {
            roots.choose(rng).expect("nonempty").clone()
        } else {
            random_point(rng, range)
        };
        factors.push(Poly::linear(one.clone(), -root.clone()));
        roots.push(root);
        remaining -= 1;
    }

    let mut quads: Vec<Poly> = Vec::new();
    for _ in 0..pairs {
        let quad = if !quads.is_empty() && rng.gen_ratio(1, 4) {
            quads.choose(rng).expect("nonempty").clone()
        } else {
            // (x - a)² + b² with b > 0
            let a = random_point(rng, range);
            let den = *DENOMS.choose(rng).expect("nonempty");
            let b = ratio(rng.gen_range(1..=2 * den), den);
            Poly::new(vec![&a * &a + &b * &b, -(&a * int(2)), one.clone()])
        };
        factors.push(quad.clone());
        quads.push(quad);
    }

    let lead_num = loop {
        let n: i64 = rng.gen_range(-5..=5);
        if n != 0 {
            break n;
        }
    };
    let lead = ratio(lead_num, *DENOMS[..3].choose(rng).expect("nonempty"));
    factors.shuffle(rng);
    let poly = factors.iter().fold(Poly::constant(lead), |acc, f| &acc * f);
    let expected = ZeroCount {
        degree: Degree::Finite(real + 2 * pairs),
        real,
        nonreal: 2 * pairs,
    };
    (poly, expected)
}

mod range_str {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::rational::{self, serde_str::RationalText, Rational};

    pub fn serialize<S: Serializer>(r: &(Rational, Rational), s: S) -> Result<S::Ok, S::Error> {
        [rational::to_string(&r.0), rational::to_string(&r.1)].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Rational, Rational), D::Error> {
        let [lo, hi] = <[RationalText; 2]>::deserialize(d)?;
        let conv = |t: RationalText| t.into_rational().map_err(serde::de::Error::custom);
        Ok((conv(lo)?, conv(hi)?))
    }
}
