//! Statistics on inversion sequences.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Every statistic the counting results refer to, computed in one pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StatRecord {
    /// Number of entries equal to zero.
    pub zeros: usize,
    /// Positions `i` with `e_i < e_{i+1}`.
    pub ascents: usize,
    /// Positions `i` with `e_i = i - 1` (this includes `e_1 = 0`).
    pub maximal_entries: usize,
    /// Number of distinct values.
    pub distinct_values: usize,
    /// Number of distinct positive values.
    pub distinct_nonzero_values: usize,
    /// Zeros strictly after the first positive entry.
    pub late_zeros: usize,
    /// Length of the maximal all-zero prefix.
    pub leading_zeros: usize,
    /// Value of the last weak left-to-right maximum (the largest entry).
    pub top: i64,
    /// Value of the last entry that is not a weak left-to-right maximum,
    /// or -1 when every position is one (the sequence is weakly increasing).
    pub bottom: i64,
}

/// Computes the full [`StatRecord`] of a word.
///
/// The empty word gives all-zero counts with `bottom = -1`.
pub fn stats(e: &[usize]) -> StatRecord {
    let n = e.len();
    let zeros = e.iter().filter(|&&v| v == 0).count();
    let ascents = e.windows(2).filter(|w| w[0] < w[1]).count();
    let maximal_entries = e.iter().enumerate().filter(|&(i, &v)| v == i).count();

    let mut values: Vec<usize> = e.to_vec();
    values.sort_unstable();
    values.dedup();
    let distinct_values = values.len();
    let distinct_nonzero_values = values.iter().filter(|&&v| v > 0).count();

    let leading_zeros = e.iter().take_while(|&&v| v == 0).count();
    let late_zeros = zeros - leading_zeros;

    let mut top = 0i64;
    let mut bottom = -1i64;
    let mut running_max = None;
    for &v in e {
        if running_max.is_none_or(|m| v >= m) {
            running_max = Some(v);
            top = v as i64;
        } else {
            bottom = v as i64;
        }
    }
    if n == 0 {
        top = 0;
    }

    StatRecord {
        zeros,
        ascents,
        maximal_entries,
        distinct_values,
        distinct_nonzero_values,
        late_zeros,
        leading_zeros,
        top,
        bottom,
    }
}

/// 1-based positions `j` with `e_i <= e_j` for every `i < j`.
pub fn weak_left_to_right_maxima(e: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut running_max = None;
    for (i, &v) in e.iter().enumerate() {
        if running_max.is_none_or(|m| v >= m) {
            running_max = Some(v);
            out.push(i + 1);
        }
    }
    out
}

/// Names for the fields of [`StatRecord`], plus the last entry `e_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statistic {
    /// [`StatRecord::zeros`]
    Zeros,
    /// [`StatRecord::ascents`]
    Ascents,
    /// [`StatRecord::maximal_entries`]
    MaximalEntries,
    /// [`StatRecord::distinct_values`]
    DistinctValues,
    /// [`StatRecord::distinct_nonzero_values`]
    DistinctNonzeroValues,
    /// [`StatRecord::late_zeros`]
    LateZeros,
    /// [`StatRecord::leading_zeros`]
    LeadingZeros,
    /// [`StatRecord::top`]
    Top,
    /// [`StatRecord::bottom`]
    Bottom,
    /// The last entry `e_n` (-1 on the empty sequence).
    LastEntry,
}

impl Statistic {
    /// All statistics, in declaration order.
    pub const ALL: [Statistic; 10] = [
        Statistic::Zeros,
        Statistic::Ascents,
        Statistic::MaximalEntries,
        Statistic::DistinctValues,
        Statistic::DistinctNonzeroValues,
        Statistic::LateZeros,
        Statistic::LeadingZeros,
        Statistic::Top,
        Statistic::Bottom,
        Statistic::LastEntry,
    ];

    /// Snake-case name used in text forms.
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Zeros => "zeros",
            Statistic::Ascents => "ascents",
            Statistic::MaximalEntries => "maximal_entries",
            Statistic::DistinctValues => "distinct_values",
            Statistic::DistinctNonzeroValues => "distinct_nonzero_values",
            Statistic::LateZeros => "late_zeros",
            Statistic::LeadingZeros => "leading_zeros",
            Statistic::Top => "top",
            Statistic::Bottom => "bottom",
            Statistic::LastEntry => "last_entry",
        }
    }

    /// Evaluates the statistic on `e`.
    pub fn eval(self, e: &[usize]) -> i64 {
        if self == Statistic::LastEntry {
            return e.last().map_or(-1, |&v| v as i64);
        }
        let s = stats(e);
        match self {
            Statistic::Zeros => s.zeros as i64,
            Statistic::Ascents => s.ascents as i64,
            Statistic::MaximalEntries => s.maximal_entries as i64,
            Statistic::DistinctValues => s.distinct_values as i64,
            Statistic::DistinctNonzeroValues => s.distinct_nonzero_values as i64,
            Statistic::LateZeros => s.late_zeros as i64,
            Statistic::LeadingZeros => s.leading_zeros as i64,
            Statistic::Top => s.top,
            Statistic::Bottom => s.bottom,
            Statistic::LastEntry => unreachable!(),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().replace('-', "_");
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == key)
            .or(match key.as_str() {
                "asc" => Some(Statistic::Ascents),
                "maximal" => Some(Statistic::MaximalEntries),
                "distinct" => Some(Statistic::DistinctValues),
                "last" => Some(Statistic::LastEntry),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownStatistic(s.into()))
    }
}
