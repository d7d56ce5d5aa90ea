//! Embedded reference datasets and readers for user-supplied series and
//! network metrics.
//!
//! Inputs and published expectations live under separate keys: inputs
//! under their domain prefix (`lexicon.`, `network.`, ...), published
//! results under `expected.`. The reproduction harness recomputes from the
//! former and compares against the latter.

use std::collections::BTreeMap;
use std::path::Path;

use csv::{ReaderBuilder, StringRecord, Trim, WriterBuilder};

use crate::error::{Error, Result};
use crate::growthkit::{GrowthPair, YearCE};
use crate::netentropy::NetworkMetrics;
use crate::theorems::LongevityRecord;

/// A dated count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    pub year: YearCE,
    pub count: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Observation(Observation),
    Metrics(NetworkMetrics),
    Longevity(LongevityRecord),
    Scalar(f64),
}

impl Payload {
    fn kind(&self) -> &'static str {
        match self {
            Payload::Observation(_) => "observation",
            Payload::Metrics(_) => "network metrics",
            Payload::Longevity(_) => "longevity record",
            Payload::Scalar(_) => "scalar",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetRecord {
    pub key: String,
    pub payload: Payload,
    pub provenance: String,
}

#[derive(Debug, Clone, Default)]
pub struct Registry {
    records: BTreeMap<String, DatasetRecord>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    pub fn insert(
        &mut self,
        key: impl Into<String>,
        payload: Payload,
        provenance: impl Into<String>,
    ) -> Result<()> {
        let key = key.into();
        let provenance = provenance.into();
        if provenance.trim().is_empty() {
            return Err(Error::DegenerateInput(format!(
                "record `{key}` has no provenance"
            )));
        }
        if self.records.contains_key(&key) {
            return Err(Error::DegenerateInput(format!(
                "duplicate dataset key `{key}`"
            )));
        }
        self.records.insert(
            key.clone(),
            DatasetRecord {
                key,
                payload,
                provenance,
            },
        );
        Ok(())
    }

    pub fn get(&self, key: &str) -> Result<&DatasetRecord> {
        self.records
            .get(key)
            .ok_or_else(|| Error::MissingKey(key.to_string()))
    }

    pub fn records(&self) -> impl Iterator<Item = &DatasetRecord> {
        self.records.values()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    fn wrong(&self, key: &str, wanted: &'static str) -> Error {
        match self.get(key) {
            Ok(rec) => Error::WrongPayload {
                key: key.to_string(),
                wanted,
                found: rec.payload.kind(),
            },
            Err(e) => e,
        }
    }

    pub fn scalar(&self, key: &str) -> Result<f64> {
        match self.get(key)?.payload {
            Payload::Scalar(v) => Ok(v),
            _ => Err(self.wrong(key, "scalar")),
        }
    }

    pub fn observation(&self, key: &str) -> Result<Observation> {
        match self.get(key)?.payload {
            Payload::Observation(o) => Ok(o),
            _ => Err(self.wrong(key, "observation")),
        }
    }

    pub fn metrics(&self, key: &str) -> Result<&NetworkMetrics> {
        match &self.get(key)?.payload {
            Payload::Metrics(m) => Ok(m),
            _ => Err(self.wrong(key, "network metrics")),
        }
    }

    pub fn longevity(&self, key: &str) -> Result<&LongevityRecord> {
        match &self.get(key)?.payload {
            Payload::Longevity(r) => Ok(r),
            _ => Err(self.wrong(key, "longevity record")),
        }
    }

    /// Pair of two stored observations, earlier first.
    pub fn pair(&self, from: &str, to: &str) -> Result<GrowthPair> {
        let a = self.observation(from)?;
        let b = self.observation(to)?;
        GrowthPair::new(a.year, a.count, b.year, b.count)
    }

    /// Keys beginning with `prefix`, in sorted order.
    pub fn keys_with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.records
            .keys()
            .filter(move |k| k.starts_with(prefix))
            .map(String::as_str)
    }
}

/// Table-row network keys, in published row order.
pub const ETA_TABLE_KEYS: [&str; 9] = [
    "network.actors",
    "network.c_elegans",
    "network.human_brain",
    "network.lexicon_1989",
    "network.lexicon_1150",
    "network.lexicon_1657",
    "network.population_1989",
    "network.population_1150",
    "network.population_1657",
];

pub const LONGEVITY_KEYS: [&str; 4] = [
    "longevity.norway_f",
    "longevity.norway_m",
    "longevity.new_zealand_m",
    "longevity.denmark_m",
];

/// Every key the built-in registry guarantees to hold.
pub const DOCUMENTED_KEYS: &[&str] = &[
    "lexicon.1150",
    "lexicon.1657",
    "lexicon.1989",
    "population.1150",
    "population.1657",
    "population.1989",
    "population.1989_census_sum",
    "network.actors",
    "network.c_elegans",
    "network.human_brain",
    "network.lexicon_1989",
    "network.lexicon_1150",
    "network.lexicon_1657",
    "network.population_1989",
    "network.population_1150",
    "network.population_1657",
    "network.population_150",
    "network.lexicon_100",
    "network.lexicon_10000",
    "network.us_population_1880",
    "network.us_population_1980",
    "rate.collective",
    "error.ratio_high",
    "error.ratio_low",
    "error.span_100",
    "error.span_332",
    "error.span_839",
    "error.span_3742",
    "lighting.cost_1750bce",
    "lighting.cost_1992",
    "lighting.start_year",
    "lighting.end_year",
    "lighting.span_years",
    "iq.rate_low",
    "iq.rate_high",
    "iq.rate_mid",
    "swadesh.retention_max",
    "swadesh.retention_min",
    "swadesh.retention_avg",
    "swadesh.divergence_avg",
    "swadesh.original_age_years",
    "swadesh.revised_age_years",
    "dating.rate_swadesh",
    "dating.rate_english_1150",
    "dating.origin_words_one",
    "dating.origin_words_hundred",
    "us.population_1880",
    "us.population_1980",
    "us.labor_participation",
    "us.eta_pop_avg_printed",
    "us.literature_growth_per_year",
    "longevity.norway_f",
    "longevity.norway_m",
    "longevity.new_zealand_m",
    "longevity.denmark_m",
    "brain.conduction_velocity",
    "expected.error.high_100",
    "expected.error.high_332",
    "expected.error.high_839",
    "expected.error.high_3742",
    "expected.error.low_100",
    "expected.error.low_332",
    "expected.error.low_839",
    "expected.error.low_3742",
    "expected.rate.lexicon_1150_1989",
    "expected.rate.lexicon_1657_1989",
    "expected.rate.lighting",
    "expected.rate.iq_mid",
    "expected.eta.actors",
    "expected.eta.c_elegans",
    "expected.eta.human_brain",
    "expected.eta.lexicon_1989",
    "expected.eta.lexicon_1150",
    "expected.eta.lexicon_1657",
    "expected.eta.population_1989",
    "expected.eta.population_1150",
    "expected.eta.population_1657",
    "expected.average.pop_1150_1989",
    "expected.average.lex_1150_1989",
    "expected.average.product_1150_1989",
    "expected.average.pop_1657_1989",
    "expected.average.lex_1657_1989",
    "expected.average.product_1657_1989",
    "expected.product.1989",
    "expected.product.primitive",
    "expected.eta.population_150",
    "expected.eta.lexicon_100",
    "expected.compare.modern_vs_primitive",
    "expected.compare.brain_vs_c_elegans",
    "expected.brain.network_velocity",
    "expected.innate.1150_1989",
    "expected.innate.1657_1989",
    "expected.swadesh.divergence_min",
    "expected.swadesh.divergence_max",
    "expected.swadesh.adjusted",
    "expected.swadesh.per_branch",
    "expected.dating.swadesh_one",
    "expected.dating.swadesh_hundred",
    "expected.dating.english_one",
    "expected.dating.english_hundred",
    "expected.econ.eta_1880",
    "expected.econ.eta_1980",
    "expected.econ.eta_avg",
    "expected.econ.growth_per_year",
    "expected.longevity.norway_f.rate",
    "expected.longevity.norway_f.excess",
    "expected.longevity.norway_m.rate",
    "expected.longevity.norway_m.excess",
    "expected.longevity.new_zealand_m.rate",
    "expected.longevity.new_zealand_m.excess",
    "expected.longevity.denmark_m.rate",
    "expected.longevity.denmark_m.excess",
];

const ACTORS: &str = "Watts & Strogatz (1998), IMDB actor collaboration network";

fn year(v: f64) -> YearCE {
    YearCE::new(v).expect("finite literal")
}

/// The embedded dataset. Construction cannot fail for the shipped values;
/// a failure here is a programming error.
pub fn builtin_registry() -> Registry {
    build_registry().expect("embedded dataset is valid")
}

fn build_registry() -> Result<Registry> {
    let mut reg = Registry::new();
    let scalar = |reg: &mut Registry, key: &str, v: f64, prov: &str| {
        reg.insert(key, Payload::Scalar(v), prov)
    };
    let obs = |reg: &mut Registry, key: &str, y: f64, count: f64, prov: &str| {
        reg.insert(
            key,
            Payload::Observation(Observation {
                year: year(y),
                count,
            }),
            prov,
        )
    };

    obs(&mut reg, "lexicon.1150", 1150.0, 34_020.0, "University of Toronto Old English Dictionary project: estimated English lexicon size, 1150")?;
    obs(
        &mut reg,
        "lexicon.1657",
        1657.0,
        200_000.0,
        "Early Modern English Dictionaries Database (EMEDD): estimated lexicon size, 1657",
    )?;
    obs(
        &mut reg,
        "lexicon.1989",
        1989.0,
        616_500.0,
        "Oxford English Dictionary 1989: 616,500 word-forms",
    )?;

    obs(
        &mut reg,
        "population.1150",
        1150.0,
        2_300_000.0,
        "England, projected from Domesday estimate (Hinde 2003) at 0.5% per year",
    )?;
    obs(
        &mut reg,
        "population.1657",
        1657.0,
        5_281_347.0,
        "England, 1656 (Wrigley & Schofield 1989, Table 7.8)",
    )?;
    obs(
        &mut reg,
        "population.1989",
        1989.0,
        3.5e8,
        "English-speaking population used for the 1989 population entropy row (350,000,000)",
    )?;
    scalar(&mut reg, "population.1989_census_sum", 343_595_000.0, "Sum of 1990/1991 censuses: USA 248.7M, Canada 27,296,859, England 50,748,000, Australia 16,850,540; differs from the 350M used in the entropy row")?;

    let network = |reg: &mut Registry, key: &str, n: f64, s: f64, c: f64, prov: &str| {
        let label = key.trim_start_matches("network.");
        reg.insert(
            key,
            Payload::Metrics(NetworkMetrics::new(label, n, s, c)?),
            prov,
        )
    };
    network(&mut reg, "network.actors", 225_226.0, 3.65, 0.79, ACTORS)?;
    network(
        &mut reg,
        "network.c_elegans",
        282.0,
        2.65,
        0.28,
        "Watts & Strogatz (1998), C. elegans neural network",
    )?;
    network(
        &mut reg,
        "network.human_brain",
        1e11,
        2.49,
        0.53,
        "Neuron count from Nicholls et al. (2001) p.480; S and C from Achard et al. (2006)",
    )?;
    network(
        &mut reg,
        "network.lexicon_1989",
        616_500.0,
        2.67,
        0.437,
        "OED 1989 word count; S and C from Ferrer i Cancho & Sole (2001)",
    )?;
    network(
        &mut reg,
        "network.lexicon_1150",
        34_020.0,
        2.67,
        0.437,
        "Old English Dictionary project word count; S and C from Ferrer i Cancho & Sole (2001)",
    )?;
    network(
        &mut reg,
        "network.lexicon_1657",
        200_000.0,
        2.67,
        0.437,
        "EMEDD word count; S and C from Ferrer i Cancho & Sole (2001)",
    )?;
    network(
        &mut reg,
        "network.population_1989",
        3.5e8,
        3.65,
        0.79,
        "English-speaking population 1989 (350M); S and C from the actor network",
    )?;
    network(
        &mut reg,
        "network.population_1150",
        2_300_000.0,
        3.65,
        0.79,
        "England 1150 (Hinde 2003 projection); S and C from the actor network",
    )?;
    network(
        &mut reg,
        "network.population_1657",
        5_281_347.0,
        3.65,
        0.79,
        "England 1656 (Wrigley & Schofield 1989); S and C from the actor network",
    )?;
    network(
        &mut reg,
        "network.population_150",
        150.0,
        3.65,
        0.79,
        "Hypothetical primitive society of 150 people; modern S and C from the actor network",
    )?;
    network(
        &mut reg,
        "network.lexicon_100",
        100.0,
        2.67,
        0.437,
        "Hypothetical primitive lexicon of 100 vocalizations; modern S and C of English",
    )?;
    network(
        &mut reg,
        "network.lexicon_10000",
        10_000.0,
        2.67,
        0.437,
        "Hypothetical lexicon of 10,000 words; modern S and C of English",
    )?;
    network(
        &mut reg,
        "network.us_population_1880",
        50_155_783.0,
        3.65,
        0.79,
        "US Census Office 1880, Table Ia: 50,155,783 people; S and C from the actor network",
    )?;
    network(
        &mut reg,
        "network.us_population_1980",
        226_545_805.0,
        3.65,
        0.79,
        "US Census Bureau 1980, Table 72: 226,545,805 people; S and C from the actor network",
    )?;

    scalar(
        &mut reg,
        "rate.collective",
        0.0341,
        "Adopted collective rate, 3.41% per decade, from lighting efficiency",
    )?;
    scalar(
        &mut reg,
        "error.ratio_high",
        0.10,
        "Error scenario: later count 10% too high",
    )?;
    scalar(
        &mut reg,
        "error.ratio_low",
        -0.10,
        "Error scenario: later count 10% too low",
    )?;
    for span in [100.0, 332.0, 839.0, 3742.0] {
        scalar(
            &mut reg,
            &format!("error.span_{span}"),
            span,
            "Error table span in years",
        )?;
    }

    scalar(&mut reg, "lighting.cost_1750bce", 41.5, "Nordhaus (1997): sesame lamp, Babylonia c.1750 BCE, 41.5 hours of work per 1000 lumen-hours")?;
    scalar(
        &mut reg,
        "lighting.cost_1992",
        0.000119,
        "Nordhaus (1997): compact fluorescent, 1992, 0.000119 hours of work per 1000 lumen-hours",
    )?;
    scalar(
        &mut reg,
        "lighting.start_year",
        -1750.0,
        "Nordhaus (1997): 1750 BCE",
    )?;
    scalar(
        &mut reg,
        "lighting.end_year",
        1992.0,
        "Nordhaus (1997): 1992",
    )?;
    scalar(
        &mut reg,
        "lighting.span_years",
        3742.0,
        "1750 + 1992 years, no year zero",
    )?;

    scalar(
        &mut reg,
        "iq.rate_low",
        0.0300,
        "Flynn (2007): 3.00 IQ points per decade, US 1947-2002, read as 3.00% per decade",
    )?;
    scalar(
        &mut reg,
        "iq.rate_high",
        0.0363,
        "Flynn (2007): 3.63 IQ points per decade, read as 3.63% per decade",
    )?;
    scalar(
        &mut reg,
        "iq.rate_mid",
        0.03315,
        "Midpoint of the IQ rate band, 3.315% per decade",
    )?;

    scalar(
        &mut reg,
        "swadesh.retention_max",
        0.90,
        "Swadesh (1971) p.276: maximum retention 90 percent per thousand years",
    )?;
    scalar(
        &mut reg,
        "swadesh.retention_min",
        0.81,
        "Swadesh (1971) p.276: minimum retention 81 percent per thousand years",
    )?;
    scalar(&mut reg, "swadesh.retention_avg", 0.86, "Swadesh (1971) p.276: average retention 86 percent, i.e. 14% divergence per thousand years")?;
    scalar(
        &mut reg,
        "swadesh.divergence_avg",
        0.14,
        "Swadesh (1971): average divergence 14% per thousand years (1 - 0.86)",
    )?;
    scalar(&mut reg, "swadesh.original_age_years", 7037.0, "Swadesh (1971) p.84: ancestor at least 7000 years before c.1966, restated to 2003 as 7000 + 37")?;
    scalar(
        &mut reg,
        "swadesh.revised_age_years",
        8700.0,
        "Gray & Atkinson (2003): Indo-European began 8700 years ago",
    )?;

    scalar(
        &mut reg,
        "dating.rate_swadesh",
        0.0566,
        "Dating input: adjusted Swadesh per-branch rate, 5.66% per thousand years, as tabulated",
    )?;
    scalar(
        &mut reg,
        "dating.rate_english_1150",
        0.0616,
        "Dating input: innate rate from English 1150-1989, 6.16% per thousand years, as tabulated",
    )?;
    scalar(
        &mut reg,
        "dating.origin_words_one",
        1.0,
        "Dating assumption: language began with one word",
    )?;
    scalar(
        &mut reg,
        "dating.origin_words_hundred",
        100.0,
        "Dating assumption: language began with 100 vocalizations",
    )?;

    scalar(
        &mut reg,
        "us.population_1880",
        50_155_783.0,
        "US Census Office 1880, Table Ia",
    )?;
    scalar(
        &mut reg,
        "us.population_1980",
        226_545_805.0,
        "US Census Bureau 1980, Table 72",
    )?;
    scalar(
        &mut reg,
        "us.labor_participation",
        0.66,
        "Mosisa & Hipple (2006): US labour participation 2004-2005, about 66%",
    )?;
    scalar(&mut reg, "us.eta_pop_avg_printed", 11.485141, "Average US population entropy 1880-1980 as printed and used in the productivity calculation (the mean of the two printed entropies is 11.278666)")?;
    scalar(&mut reg, "us.literature_growth_per_year", 0.023, "Romer (1990): US productivity per hour grew about 10x over 100 years to 1980, about 2.3% per year")?;

    let longevity =
        |reg: &mut Registry, key: &str, label: &str, t1: f64, le1: f64, t2: f64, le2: f64| {
            reg.insert(
                key,
                Payload::Longevity(LongevityRecord {
                    label: label.to_string(),
                    t1: year(t1),
                    le1,
                    t2: year(t2),
                    le2,
                }),
                "Oeppen & Vaupel (2002), supplementary life-expectancy data",
            )
        };
    longevity(
        &mut reg,
        "longevity.norway_f",
        "Norway F",
        1841.0,
        47.9,
        1970.0,
        77.32,
    )?;
    longevity(
        &mut reg,
        "longevity.norway_m",
        "Norway M",
        1841.0,
        44.5,
        1960.0,
        71.39,
    )?;
    longevity(
        &mut reg,
        "longevity.new_zealand_m",
        "New Zealand M",
        1876.0,
        51.99,
        1944.0,
        66.58,
    )?;
    longevity(
        &mut reg,
        "longevity.denmark_m",
        "Denmark M",
        1840.0,
        43.11,
        1919.0,
        56.69,
    )?;

    scalar(
        &mut reg,
        "brain.conduction_velocity",
        100.0,
        "Nicholls et al. (2001) p.123: myelinated fibres conduct at up to more than 100 m/s",
    )?;

    // Published results, in the units they were printed in.
    let expected = [
        ("expected.error.high_100", 27.9, "Published error table, later count 10% high: 100 years, % error"),
        ("expected.error.high_332", 8.418, "Published error table, later count 10% high: 332 years"),
        ("expected.error.high_839", 3.33, "Published error table, later count 10% high: 839 years"),
        ("expected.error.high_3742", 0.07469, "Published error table, later count 10% high: 3742 years (printed 0.07469; the same text gives the fraction .007469)"),
        ("expected.error.low_100", 30.9, "Published error table, later count 10% low: 100 years"),
        ("expected.error.low_332", 9.3, "Published error table, later count 10% low: 332 years"),
        ("expected.error.low_839", 3.6, "Published error table, later count 10% low: 839 years"),
        ("expected.error.low_3742", 0.0826, "Published error table, later count 10% low: 3742 years (printed 0.0826)"),
        ("expected.rate.lexicon_1150_1989", 3.453, "Published English lexical growth rate 1150-1989, % per decade"),
        ("expected.rate.lexicon_1657_1989", 3.391, "Published English lexical growth rate 1657-1989, % per decade"),
        ("expected.rate.lighting", 3.41, "Published lighting-efficiency rate 1750 BCE-1992, % per decade"),
        ("expected.rate.iq_mid", 3.315, "Published IQ rate midpoint 1945-2002, % per decade"),
        ("expected.eta.actors", 7.52, "Published entropy, actors row"),
        ("expected.eta.c_elegans", 1.62, "Published entropy, C. elegans row"),
        ("expected.eta.human_brain", 14.71, "Published entropy, human brain row"),
        ("expected.eta.lexicon_1989", 5.932, "Published entropy, 1989 English row"),
        ("expected.eta.lexicon_1150", 4.643, "Published entropy, 1150 English row"),
        ("expected.eta.lexicon_1657", 5.431, "Published entropy, 1657 English row"),
        ("expected.eta.population_1989", 12.0, "Published entropy, 1989 population row"),
        ("expected.eta.population_1150", 8.938, "Published entropy, 1150 population row"),
        ("expected.eta.population_1657", 9.445, "Published entropy, 1657 population row"),
        ("expected.average.pop_1150_1989", 10.47, "Published averaged population entropy 1150-1989"),
        ("expected.average.lex_1150_1989", 5.29, "Published averaged lexicon entropy 1150-1989"),
        ("expected.average.product_1150_1989", 55.37, "Published product of averaged entropies 1150-1989"),
        ("expected.average.pop_1657_1989", 10.72, "Published averaged population entropy 1657-1989"),
        ("expected.average.lex_1657_1989", 5.68, "Published averaged lexicon entropy 1657-1989"),
        ("expected.average.product_1657_1989", 60.94, "Published product of averaged entropies 1657-1989"),
        ("expected.product.1989", 71.21, "Published 1989 population x lexicon entropy product"),
        ("expected.product.primitive", 6.265, "Published entropy product for 150 people with 100 vocalizations"),
        ("expected.eta.population_150", 3.057, "Published entropy of a 150-person society"),
        ("expected.eta.lexicon_100", 2.049, "Published entropy of a 100-word lexicon"),
        ("expected.compare.modern_vs_primitive", 11.37, "Published ratio, 1989 product over primitive product"),
        ("expected.compare.brain_vs_c_elegans", 9.08, "Published ratio, human brain entropy over C. elegans entropy"),
        ("expected.brain.network_velocity", 1471.0, "100 m/s bi-nodal conduction times the brain entropy 14.71, m/s"),
        ("expected.innate.1150_1989", 6.16, "Published innate rate 1150-1989, % per thousand years"),
        ("expected.innate.1657_1989", 5.60, "Published innate rate 1657-1989, % per thousand years"),
        ("expected.swadesh.divergence_min", 10.0, "Published minimum divergence, % per thousand years"),
        ("expected.swadesh.divergence_max", 19.0, "Published maximum divergence, % per thousand years"),
        ("expected.swadesh.adjusted", 11.32, "Published adjusted Swadesh divergence, % per thousand years"),
        ("expected.swadesh.per_branch", 5.66, "Published per-branch (half) adjusted rate, % per thousand years"),
        ("expected.dating.swadesh_one", 235_544.0, "Published years before 1989, 5.66% rate, one initial word"),
        ("expected.dating.swadesh_hundred", 154_181.0, "Published years before 1989, 5.66% rate, 100 initial words"),
        ("expected.dating.english_one", 216_425.0, "Published years before 1989, 6.16% rate, one initial word"),
        ("expected.dating.english_hundred", 141_666.0, "Published years before 1989, 6.16% rate, 100 initial words"),
        ("expected.econ.eta_1880", 10.818657, "Published entropy of the 1880 US population"),
        ("expected.econ.eta_1980", 11.738675, "Published entropy of the 1980 US population"),
        ("expected.econ.eta_avg", 11.485141, "Published average of the 1880 and 1980 US population entropies"),
        ("expected.econ.growth_per_year", 2.53, "Published US productivity growth 1880-1980, % per year (recomputes to 2.585)"),
        ("expected.longevity.norway_f.rate", 3.71, "Published longevity rate, Norway F, % per decade"),
        ("expected.longevity.norway_f.excess", 8.85, "Published excess over 3.41%, Norway F, %"),
        ("expected.longevity.norway_m.rate", 3.97, "Published longevity rate, Norway M"),
        ("expected.longevity.norway_m.excess", 16.48, "Published excess over 3.41%, Norway M"),
        ("expected.longevity.new_zealand_m.rate", 3.63, "Published longevity rate, New Zealand M"),
        ("expected.longevity.new_zealand_m.excess", 6.672, "Published excess over 3.41%, New Zealand M"),
        ("expected.longevity.denmark_m.rate", 3.46, "Published longevity rate, Denmark M"),
        ("expected.longevity.denmark_m.excess", 1.652, "Published excess over 3.41%, Denmark M"),
    ];
    for (key, value, prov) in expected {
        scalar(&mut reg, key, value, prov)?;
    }
    Ok(reg)
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes())
}

fn record_line(rec: &StringRecord) -> usize {
    rec.position().map_or(0, |p| p.line() as usize)
}

fn csv_error(err: csv::Error) -> Error {
    let line = err.position().map_or(0, |p| p.line() as usize);
    Error::Parse {
        line,
        message: err.to_string(),
    }
}

/// Decimal point only; no thousands separators, no `inf`/`nan`.
fn parse_number(field: &str, line: usize, what: &str) -> Result<f64> {
    let bad = || Error::Parse {
        line,
        message: format!("{what}: `{field}` is not a plain decimal number"),
    };
    let plain = !field.is_empty()
        && field
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
    if !plain {
        return Err(bad());
    }
    match field.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(bad()),
    }
}

fn is_header(rec: &StringRecord, names: &[&str]) -> bool {
    rec.len() == names.len()
        && rec
            .iter()
            .zip(names)
            .all(|(field, name)| field.eq_ignore_ascii_case(name))
}

fn expect_fields(rec: &StringRecord, count: usize, columns: &str) -> Result<()> {
    if rec.len() == count {
        Ok(())
    } else {
        Err(Error::Parse {
            line: record_line(rec),
            message: format!("expected {count} columns `{columns}`, got {}", rec.len()),
        })
    }
}

fn validation(line: usize, err: Error) -> Error {
    Error::Validation {
        line,
        source: Box::new(err),
    }
}

/// Parses `year,count` rows into strictly time-ordered observations.
pub fn parse_series(text: &str) -> Result<Vec<Observation>> {
    let mut out: Vec<(usize, Observation)> = Vec::new();
    for (idx, rec) in reader(text).records().enumerate() {
        let rec = rec.map_err(csv_error)?;
        if idx == 0 && is_header(&rec, &["year", "count"]) {
            continue;
        }
        expect_fields(&rec, 2, "year,count")?;
        let line = record_line(&rec);
        let year = YearCE::new(parse_number(&rec[0], line, "year")?)?;
        let count = parse_number(&rec[1], line, "count")?;
        if count <= 0.0 {
            return Err(validation(line, Error::NonPositiveCount(count)));
        }
        if let Some((_, prev)) = out.last() {
            if year.value() <= prev.year.value() {
                return Err(validation(
                    line,
                    Error::TimeOrder {
                        t1: prev.year.value(),
                        t2: year.value(),
                    },
                ));
            }
        }
        out.push((line, Observation { year, count }));
    }
    match out.len() {
        0 => Err(Error::Parse {
            line: 0,
            message: "series contains no observations".into(),
        }),
        1 => Err(validation(
            out[0].0,
            Error::EmptyInput("a series needs at least two observations"),
        )),
        _ => Ok(out.into_iter().map(|(_, o)| o).collect()),
    }
}

pub fn load_series(path: &Path) -> Result<Vec<GrowthPair>> {
    let text = std::fs::read_to_string(path)?;
    Ok(series_pairs(&parse_series(&text)?))
}

/// Consecutive pairs of an ordered series.
pub fn series_pairs(observations: &[Observation]) -> Vec<GrowthPair> {
    observations
        .windows(2)
        .map(|w| {
            GrowthPair::new(w[0].year, w[0].count, w[1].year, w[1].count)
                .expect("series is validated")
        })
        .collect()
}

/// Parses `label,n,S,C` rows.
pub fn parse_metrics(text: &str) -> Result<Vec<NetworkMetrics>> {
    let mut out = Vec::new();
    for (idx, rec) in reader(text).records().enumerate() {
        let rec = rec.map_err(csv_error)?;
        if idx == 0 && is_header(&rec, &["label", "n", "S", "C"]) {
            continue;
        }
        expect_fields(&rec, 4, "label,n,S,C")?;
        let line = record_line(&rec);
        let n = parse_number(&rec[1], line, "n")?;
        let s = parse_number(&rec[2], line, "S")?;
        let c = parse_number(&rec[3], line, "C")?;
        let m = NetworkMetrics::new(&rec[0], n, s, c).map_err(|e| validation(line, e))?;
        out.push(m);
    }
    if out.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "metrics file contains no rows".into(),
        });
    }
    Ok(out)
}

pub fn load_metrics(path: &Path) -> Result<Vec<NetworkMetrics>> {
    parse_metrics(&std::fs::read_to_string(path)?)
}

fn write_rows<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = WriterBuilder::new().from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn write_series(observations: &[Observation]) -> String {
    write_rows(
        &["year", "count"],
        observations
            .iter()
            .map(|o| vec![o.year.value().to_string(), o.count.to_string()]),
    )
}

pub fn write_metrics(metrics: &[NetworkMetrics]) -> String {
    write_rows(
        &["label", "n", "S", "C"],
        metrics.iter().map(|m| {
            vec![
                m.label().to_string(),
                m.n().to_string(),
                m.path_length().to_string(),
                m.clustering().to_string(),
            ]
        }),
    )
}
