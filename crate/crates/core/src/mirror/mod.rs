//! The hypergeometric family 𝔽, 𝔽₋₁, 𝔽̂₀, the map 𝕄 and the I_p series.

pub mod hg;
pub mod ip;
pub mod ladder;
pub mod verify;

pub use hg::{apply_m, build_f, build_fhat_zero, build_fminus1, iterates, HgSeries, SeriesKind};
pub use ip::{compute_ip_family, l_series, one_minus_nn_x, IpFamily};
pub use ladder::{Ladder, LadderKind, LadderSeries};
pub use verify::{
    descend_c, verify_descent, verify_hat_congruence, verify_i_identities, verify_periodicity,
    verify_picard_fuchs, DescentState,
};
