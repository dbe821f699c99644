//! Text formats for the CLI: JSON for series and reports, CSV/JSON for
//! Euler characteristic tables. Rationals are always `"num/den"` strings.

use serde::{Deserialize, Serialize};

use crate::continuum::ResidualCheck;
use crate::error::{Error, Result};
use crate::euler_char::ChiValue;
use crate::exact::{MuSeries, MuTerm, NPoly, Rational, TSeries};
use crate::penner::{Mismatch, VerificationReport};

/// How many mismatching coefficients a report spells out.
pub const REPORTED_MISMATCHES: usize = 5;

#[derive(Serialize, Deserialize)]
struct TSeriesJson {
    order: usize,
    coefficients: Vec<CoefficientJson>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientJson {
    power: usize,
    poly: Vec<(usize, String)>,
}

fn poly_json(p: &NPoly) -> Vec<(usize, String)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| (d, c.to_string()))
        .collect()
}

fn parse_poly(entries: &[(usize, String)]) -> Result<NPoly> {
    let mut coeffs = Vec::new();
    for (degree, c) in entries {
        if coeffs.len() <= *degree {
            coeffs.resize(degree + 1, Rational::zero());
        }
        coeffs[*degree] += &c.parse::<Rational>()?;
    }
    Ok(NPoly::from_coeffs(coeffs))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn tseries_value(s: &TSeries) -> TSeriesJson {
    TSeriesJson {
        order: s.order(),
        coefficients: s
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(power, c)| CoefficientJson {
                power,
                poly: poly_json(c),
            })
            .collect(),
    }
}

pub fn serialize_tseries(s: &TSeries) -> String {
    to_json(&tseries_value(s))
}

pub fn parse_tseries(text: &str) -> Result<TSeries> {
    let raw: TSeriesJson = from_json(text)?;
    let mut s = TSeries::zero(raw.order);
    for c in &raw.coefficients {
        if c.power > raw.order {
            return Err(Error::Parse(format!("power {} exceeds order {}", c.power, raw.order)));
        }
        s.add_to(c.power, &parse_poly(&c.poly)?);
    }
    Ok(s)
}

#[derive(Serialize, Deserialize)]
struct MuTermJson {
    coeff: String,
    mu_power: i64,
    log_power: u8,
}

#[derive(Serialize, Deserialize)]
struct MuSeriesJson {
    terms: Vec<MuTermJson>,
    notes: Vec<String>,
}

pub fn serialize_museries(s: &MuSeries, notes: &[String]) -> String {
    to_json(&MuSeriesJson {
        terms: s
            .terms()
            .iter()
            .map(|t| MuTermJson {
                coeff: t.coeff.to_string(),
                mu_power: t.mu_power,
                log_power: t.log_power,
            })
            .collect(),
        notes: notes.to_vec(),
    })
}

pub fn parse_museries(text: &str) -> Result<(MuSeries, Vec<String>)> {
    let raw: MuSeriesJson = from_json(text)?;
    let terms = raw
        .terms
        .into_iter()
        .map(|t| Ok(MuTerm::new(t.coeff.parse()?, t.mu_power, t.log_power)))
        .collect::<Result<Vec<_>>>()?;
    Ok((MuSeries::from_terms(terms)?, raw.notes))
}

#[derive(Serialize)]
struct MismatchJson {
    power: usize,
    left: Vec<(usize, String)>,
    right: Vec<(usize, String)>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    identity: &'a str,
    order: usize,
    size_param: String,
    matched: bool,
    mismatch_count: usize,
    mismatches: Vec<MismatchJson>,
    notes: &'a [String],
}

fn mismatch_json(m: &Mismatch) -> MismatchJson {
    MismatchJson {
        power: m.power,
        left: poly_json(&m.left),
        right: poly_json(&m.right),
    }
}

fn report_value(r: &VerificationReport) -> ReportJson<'_> {
    ReportJson {
        identity: r.identity.token(),
        order: r.order,
        size_param: r.size.to_string(),
        matched: r.matched,
        mismatch_count: r.mismatches.len(),
        mismatches: r
            .mismatches
            .iter()
            .take(REPORTED_MISMATCHES)
            .map(mismatch_json)
            .collect(),
        notes: &r.notes,
    }
}

/// Report JSON; only the first [`REPORTED_MISMATCHES`] mismatches are spelled out.
pub fn serialize_report(r: &VerificationReport) -> String {
    to_json(&report_value(r))
}

/// Several reports as one JSON object, with identities that were not run.
pub fn serialize_reports(reports: &[VerificationReport], skipped: &[(String, String)]) -> String {
    #[derive(Serialize)]
    struct Skipped<'a> {
        identity: &'a str,
        reason: &'a str,
    }
    #[derive(Serialize)]
    struct All<'a> {
        all_matched: bool,
        reports: Vec<ReportJson<'a>>,
        skipped: Vec<Skipped<'a>>,
    }
    to_json(&All {
        all_matched: reports.iter().all(|r| r.matched),
        reports: reports.iter().map(report_value).collect(),
        skipped: skipped
            .iter()
            .map(|(identity, reason)| Skipped { identity, reason })
            .collect(),
    })
}

pub const CHI_CSV_HEADER: &str = "kind,genus_index,punctures,value";

pub fn chi_csv(values: &[ChiValue]) -> String {
    let mut out = String::from(CHI_CSV_HEADER);
    out.push('\n');
    for v in values {
        out.push_str(&format!("{},{},{},{}\n", v.kind, v.genus_index, v.punctures, v.value));
    }
    out
}

pub fn parse_chi_csv(text: &str) -> Result<Vec<ChiValue>> {
    let mut lines = text.lines();
    if lines.next() != Some(CHI_CSV_HEADER) {
        return Err(Error::Parse("missing chi CSV header".into()));
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            let [kind, g, n, value] = fields[..] else {
                return Err(Error::Parse(format!("expected 4 fields in {line:?}")));
            };
            let int = |s: &str| s.parse::<u32>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
            Ok(ChiValue {
                kind: kind.parse()?,
                genus_index: int(g)?,
                punctures: int(n)?,
                value: value.parse()?,
            })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct ChiJson {
    kind: String,
    genus_index: u32,
    punctures: u32,
    value: String,
}

pub fn chi_json(values: &[ChiValue]) -> String {
    let rows: Vec<ChiJson> = values
        .iter()
        .map(|v| ChiJson {
            kind: v.kind.to_string(),
            genus_index: v.genus_index,
            punctures: v.punctures,
            value: v.value.to_string(),
        })
        .collect();
    to_json(&rows)
}

pub fn parse_chi_json(text: &str) -> Result<Vec<ChiValue>> {
    let rows: Vec<ChiJson> = from_json(text)?;
    rows.into_iter()
        .map(|r| {
            Ok(ChiValue {
                kind: r.kind.parse()?,
                genus_index: r.genus_index,
                punctures: r.punctures,
                value: r.value.parse()?,
            })
        })
        .collect()
}

/// Floats with 17 significant digits, so every value round-trips.
fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn serialize_residual(r: &ResidualCheck) -> String {
    format!(
        "{{\"N\":{},\"mu\":{},\"t\":{},\"q_max\":{},\"residual\":{},\"target\":{},\"abs_error\":{}}}",
        r.point.n(),
        sci(r.point.mu()),
        sci(r.point.t()),
        r.q_max,
        sci(r.residual),
        sci(r.target),
        sci(r.abs_error)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuum::{double_scaling_residual, penner_continuum, ScalingPoint};
    use crate::euler_char::{chi_table, ChiKind};
    use crate::penner::{nonorientable_product_series, verify_identity, Identity, Size};
    use proptest::prelude::*;

    #[test]
    fn zero_series_has_no_coefficients() {
        assert_eq!(serialize_tseries(&TSeries::zero(4)), r#"{"order":4,"coefficients":[]}"#);
    }

    #[test]
    fn log_one_plus_t() {
        let s = nonorientable_product_series(Size::Concrete(1), 3);
        assert_eq!(
            serialize_tseries(&s),
            r#"{"order":3,"coefficients":[{"power":1,"poly":[[0,"1/1"]]},{"power":2,"poly":[[0,"-1/2"]]},{"power":3,"poly":[[0,"1/3"]]}]}"#
        );
    }

    #[test]
    fn museries_term_format() {
        let json = serialize_museries(&penner_continuum(2).unwrap(), &[]);
        assert!(
            json.contains(r#"{"coeff":"-1/240","mu_power":-2,"log_power":0}"#),
            "{json}"
        );
        assert!(json.ends_with(r#""notes":[]}"#));
    }

    #[test]
    fn chi_csv_row() {
        let table = chi_table(ChiKind::Complex, 1, 1);
        assert_eq!(chi_csv(&table), "kind,genus_index,punctures,value\ncomplex,1,1,-1/12\n");
        assert!(parse_chi_csv("kind,g,n,value\n").is_err());
        assert!(parse_chi_csv("kind,genus_index,punctures,value\ncomplex,1,1\n").is_err());
    }

    #[test]
    fn report_fields() {
        let r = verify_identity(Identity::HermitianTripleVsDoubleSum, Size::Concrete(2), 4).unwrap();
        let v: serde_json::Value = serde_json::from_str(&serialize_report(&r)).unwrap();
        assert_eq!(v["identity"], "eq5v6");
        assert_eq!(v["size_param"], "2");
        assert_eq!(v["matched"], true);
        assert_eq!(v["mismatch_count"], 0);
    }

    #[test]
    fn report_truncates_mismatches() {
        let mut r = verify_identity(Identity::MirrorSum, Size::Concrete(1), 8).unwrap();
        r.mismatches = (0..8)
            .map(|k| Mismatch {
                power: k,
                left: NPoly::one(),
                right: NPoly::zero(),
            })
            .collect();
        let v: serde_json::Value = serde_json::from_str(&serialize_report(&r)).unwrap();
        assert_eq!(v["mismatch_count"], 8);
        assert_eq!(v["mismatches"].as_array().unwrap().len(), REPORTED_MISMATCHES);
    }

    #[test]
    fn residual_is_json_with_round_tripping_floats() {
        let p = ScalingPoint::new(50, 3.0).unwrap();
        let r = double_scaling_residual(&p, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&serialize_residual(&r)).unwrap();
        assert_eq!(v["residual"].as_f64().unwrap(), r.residual);
        assert_eq!(v["N"], 50);
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn npoly() -> impl Strategy<Value = NPoly> {
        prop::collection::vec(rational(), 0..5).prop_map(NPoly::from_coeffs)
    }

    fn tseries() -> impl Strategy<Value = TSeries> {
        (0usize..7).prop_flat_map(|order| {
            prop::collection::vec(npoly(), order + 1).prop_map(move |cs| TSeries::from_coeffs(order, cs))
        })
    }

    fn museries() -> impl Strategy<Value = MuSeries> {
        prop::collection::vec((rational(), -8i64..4, 0u8..2), 0..8)
            .prop_map(|ts| MuSeries::from_terms(ts.into_iter().map(|(c, a, b)| MuTerm::new(c, a, b))).unwrap())
    }

    fn chi_values() -> impl Strategy<Value = Vec<ChiValue>> {
        prop::collection::vec((any::<bool>(), 0u32..20, 0u32..20, rational()), 0..10).prop_map(|rows| {
            rows.into_iter()
                .map(|(complex, g, n, value)| ChiValue {
                    kind: if complex { ChiKind::Complex } else { ChiKind::Real },
                    genus_index: g,
                    punctures: n,
                    value,
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn tseries_round_trip(s in tseries()) {
            let text = serialize_tseries(&s);
            prop_assert_eq!(parse_tseries(&text).unwrap(), s.clone());
            prop_assert_eq!(serialize_tseries(&s), text);
        }

        #[test]
        fn museries_round_trip(s in museries(), notes in prop::collection::vec("[a-z ,\"]{0,12}", 0..3)) {
            let (back, back_notes) = parse_museries(&serialize_museries(&s, &notes)).unwrap();
            prop_assert_eq!(back, s);
            prop_assert_eq!(back_notes, notes);
        }

        #[test]
        fn chi_tables_round_trip(rows in chi_values()) {
            prop_assert_eq!(parse_chi_csv(&chi_csv(&rows)).unwrap(), rows.clone());
            prop_assert_eq!(parse_chi_json(&chi_json(&rows)).unwrap(), rows);
        }
    }
}
