//! Published values the computations are checked against: the first four
//! generating polynomials, the moment polynomials of orders 1 through 7, and
//! the limits of the coefficient of variation and scaled moments.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::bipoly::QPoly;
use crate::error::{Error, Result};
use crate::moments::{RationalPoly, Surd};

const S1: &str = "q^4+q^2+q+1";
const S2: &str = "q^21+q^16+2*q^12+q^9+q^8+q^7+q^6+q^5+2*q^4+2*q^3+q^2+q+1";
const S3: &str = "q^65+q^56+q^48+q^47+q^41+q^39+q^37+2*q^35+q^32+q^30+2*q^29+q^28+q^26+3*q^24\
+q^23+q^22+q^21+q^20+2*q^19+2*q^18+3*q^17+q^16+q^15+2*q^14+2*q^13+2*q^12+3*q^11+q^10+3*q^9\
+3*q^8+3*q^7+4*q^6+3*q^5+2*q^4+2*q^3+q^2+q+1";
const S4: &str = "q^155+q^141+q^128+q^125+q^116+q^112+2*q^105+q^103+q^100+2*q^95+q^93+q^91\
+2*q^89+q^85+q^84+q^83+2*q^82+q^80+q^79+q^78+q^76+q^74+q^73+q^72+2*q^71+2*q^70+q^69+2*q^68\
+q^67+q^65+q^64+q^63+5*q^61+q^60+2*q^59+3*q^57+q^56+3*q^55+4*q^53+2*q^52+2*q^51+2*q^50+q^49\
+2*q^48+3*q^47+2*q^46+3*q^45+4*q^44+2*q^43+q^42+5*q^40+3*q^39+4*q^38+5*q^37+2*q^36+3*q^35\
+q^34+4*q^33+6*q^32+5*q^31+3*q^30+4*q^29+3*q^28+5*q^27+4*q^26+7*q^25+5*q^24+6*q^23+3*q^22\
+4*q^21+5*q^20+5*q^19+4*q^18+5*q^17+6*q^16+5*q^15+4*q^14+7*q^13+6*q^12+7*q^11+7*q^10+6*q^9\
+6*q^8+5*q^7+4*q^6+3*q^5+2*q^4+2*q^3+q^2+q+1";

/// Published `S_n(q)` for `n` in `1..=4`.
pub fn published_straub_poly(n: u64) -> Option<QPoly> {
    let text = match n {
        1 => S1,
        2 => S2,
        3 => S3,
        4 => S4,
        _ => return None,
    };
    Some(parse_q_sum(text).expect("embedded polynomial parses"))
}

/// Parses sums of terms `c*q^e`, `q^e`, `c*q`, `q` and `c` with optional signs.
pub fn parse_q_sum(text: &str) -> Result<QPoly> {
    let bad = |msg: &str| Error::Parse {
        line: 1,
        msg: format!("{msg}: {text:?}"),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut poly = QPoly::zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (negative, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let (coeff, power) = match term.split_once('q') {
            None => (term, None),
            Some((c, p)) => (c.strip_suffix('*').unwrap_or(c), Some(p)),
        };
        let mut c: BigInt = if coeff.is_empty() {
            BigInt::from(1)
        } else {
            coeff.parse().map_err(|_| bad("bad coefficient"))?
        };
        if negative {
            c = -c;
        }
        let e = match power {
            None => 0,
            Some("") => 1,
            Some(p) => p
                .strip_prefix('^')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| bad("bad exponent"))?,
        };
        poly.add_term(e, c);
    }
    Ok(poly)
}

fn times_n_n_plus_1(inner: RationalPoly) -> RationalPoly {
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::from_integer(0.into());
    &RationalPoly::new(vec![zero, one.clone(), one]) * &inner
}

/// Published polynomial in `n` for the mean (`k = 1`) or the central moment
/// of order `k` in `2..=7`.
pub fn published_moment_polynomial(k: u32) -> Option<RationalPoly> {
    let p = match k {
        1 => RationalPoly::from_decimal(&["0", "19", "27", "10"], "32"),
        2 => RationalPoly::from_decimal(
            &["0", "1518", "6256", "10505", "9700", "4687", "934"],
            "15360",
        ),
        3 => RationalPoly::from_decimal(
            &[
                "0", "-1297776", "-4342612", "-4756804", "1535905", "11839450", "17215282",
                "12775144", "4945025", "793586",
            ],
            "27525120",
        ),
        4 => RationalPoly::from_decimal(
            &[
                "0",
                "4135638960",
                "7648567524",
                "3269131844",
                "8734303600",
                "34594762895",
                "68082466947",
                "97494786972",
                "109173019890",
                "87568584895",
                "45408125279",
                "13490284234",
                "1743712560",
            ],
            "54499737600",
        ),
        5 => times_n_n_plus_1(RationalPoly::from_decimal(
            &[
                "-65049004454400",
                "-30975685518528",
                "91113907956144",
                "43165327777096",
                "-105409116317640",
                "-95604599727502",
                "42586120680111",
                "115227024155664",
                "126787455814599",
                "154511084293844",
                "153901186416765",
                "93240357590320",
                "30331407775461",
                "4115597238066",
            ],
            "108825076039680",
        )),
        6 => RationalPoly::from_decimal(
            &[
                "0",
                "100625844884387235840",
                "164786511770490504960",
                "-62480060539123323264",
                "-264555566724556223856",
                "-109095423240535042640",
                "136357236921377110920",
                "128753068232342353072",
                "-37681424022539337807",
                "-81063397918244586845",
                "24538654588404043230",
                "102228197171521441748",
                "87053992212835094382",
                "52048632801161949890",
                "38855616058049391120",
                "29315654117562943844",
                "14588638597341766281",
                "3986958940758529155",
                "459077029253573970",
            ],
            "8288117791182028800",
        ),
        7 => {
            // 2^40 * 3^5 * 5^2 * 7 * 11 * 13 * 17 * 19
            let den = BigInt::from(2).pow(40)
                * BigInt::from(3).pow(5)
                * BigInt::from(25)
                * BigInt::from(7 * 11 * 13 * 17 * 19);
            times_n_n_plus_1(RationalPoly::from_decimal(
                &[
                    "-1026387551269849288826880",
                    "-745951061503715454673920",
                    "1109985197630308975715328",
                    "1420837514400804031281984",
                    "164310592679893652073504",
                    "-696941224296942655687312",
                    "-516374679437475960870016",
                    "53152679358583919475360",
                    "276198594921821905993026",
                    "91468628175188699900748",
                    "-98788608530944679782107",
                    "-77127349790945221221652",
                    "21431538183386052191306",
                    "47737754432542468750710",
                    "22516614862619041657440",
                    "7108181147332994381598",
                    "5920532244827036954724",
                    "4376090780890032310694",
                    "1525941518277673062635",
                    "203253344355858784830",
                ],
                &den.to_string(),
            ))
        }
        _ => return None,
    };
    Some(p)
}

/// A published limit: `k = 1` is the coefficient of variation, `k >= 2` the
/// scaled moment `mu_k / sigma^k`.
#[derive(Clone, Debug)]
pub struct PublishedLimit {
    pub k: u32,
    pub value: Surd,
    /// Leading digits of `value`, truncated, not rounded.
    pub digits: &'static str,
    /// The decimal as originally printed; differs from `digits` only for
    /// `k = 7`, where the leading `1` of the integer part is missing.
    pub printed: &'static str,
}

fn ratio(n: &str, d: &str) -> BigRational {
    BigRational::new(
        n.parse().expect("numerator"),
        d.parse().expect("denominator"),
    )
}

/// Limits for `k` in `1..=7` (`k = 2` is 1 by definition).
pub fn published_limit(k: u32) -> Option<PublishedLimit> {
    let sqrt_467_7680 = |r: BigRational| Surd::new(r, BigUint::from(467u32 * 7680));
    let (value, digits) = match k {
        1 => (
            Surd::new(ratio("1", "150"), BigUint::from(14010u32)),
            "0.7890923055426827989",
        ),
        2 => (Surd::rational(ratio("1", "1")), "1"),
        3 => (
            sqrt_467_7680(ratio("396793", "390815488")),
            "1.922787480888358667",
        ),
        4 => (
            Surd::rational(ratio("145309380", "16792853")),
            "8.6530490084085",
        ),
        5 => (
            sqrt_467_7680(ratio("3429664365055", "156594294624768")),
            "41.4777067204457",
        ),
        6 => (
            Surd::rational(ratio("382564191044644975", "1552893421695616")),
            "246.35572905",
        ),
        7 => (
            sqrt_467_7680(ratio("56459262321071884675", "62988906654652346368")),
            "1697.5015509357",
        ),
        _ => return None,
    };
    let printed = if k == 7 { &digits[1..] } else { digits };
    Some(PublishedLimit {
        k,
        value,
        digits,
        printed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parser() {
        assert_eq!(
            parse_q_sum("q^4+q^2+q+1").unwrap(),
            QPoly::from_terms([(4, 1), (2, 1), (1, 1), (0, 1)])
        );
        assert_eq!(
            parse_q_sum("-3*q^2 + 2 q - 7").unwrap(),
            QPoly::from_terms([(2, -3), (1, 2), (0, -7)])
        );
        assert!(parse_q_sum("q^x").is_err());
    }

    #[test]
    fn published_polynomials_count_four_to_the_n() {
        for n in 1..=4u64 {
            let s = published_straub_poly(n).unwrap();
            assert_eq!(s.eval_one(), BigInt::from(4).pow(n as u32));
        }
        assert_eq!(published_straub_poly(4).unwrap().degree_q(), 155);
        assert!(published_straub_poly(5).is_none());
    }

    #[test]
    fn moment_polynomials_have_degree_3k() {
        for k in 1..=7 {
            let p = published_moment_polynomial(k).unwrap();
            assert_eq!(p.degree(), Some(3 * k as usize), "k={k}");
        }
        // zero at n = 0: the only (1,3)-core is empty
        for k in 1..=7 {
            assert_eq!(
                published_moment_polynomial(k).unwrap().eval_int(0),
                BigRational::from_integer(0.into())
            );
        }
        assert_eq!(
            published_moment_polynomial(1).unwrap().eval_int(1),
            ratio("7", "4")
        );
        assert_eq!(
            published_moment_polynomial(2).unwrap().eval_int(1),
            ratio("35", "16")
        );
        assert!(published_moment_polynomial(8).is_none());
    }

    #[test]
    fn published_limits_agree_with_their_digits() {
        for k in 1..=7 {
            let lim = published_limit(k).unwrap();
            let places = lim.digits.split('.').nth(1).map_or(0, str::len);
            assert_eq!(lim.value.truncated_decimal(places), lim.digits, "k={k}");
        }
        assert!(published_limit(2).unwrap().value.coefficient().is_one());
        assert_eq!(published_limit(7).unwrap().printed, "697.5015509357");
    }
}
