use hikita_core::coeffs::{identity_sweep, IdentityRanges};

#[test]
fn default_sweep_passes() {
    let rep = identity_sweep(&IdentityRanges::default());
    assert!(rep.all_pass(), "{rep:?}");
    assert!(rep.total_checked() > 1000);
}

#[test]
fn empty_sweep_checks_nothing() {
    let ranges = IdentityRanges {
        r_max: 0,
        entries_len_max: 0,
        ..IdentityRanges::default()
    };
    let rep = identity_sweep(&ranges);
    assert_eq!(rep.total_checked(), 0);
    assert!(rep.all_pass());
}

#[test]
fn widened_sweep_passes() {
    let ranges = IdentityRanges {
        r_max: 3,
        ..IdentityRanges::default()
    };
    let rep = identity_sweep(&ranges);
    assert!(rep.all_pass(), "{:?}", rep.alternating_sum.failures);
    assert!(rep.total_checked() > identity_sweep(&IdentityRanges::default()).total_checked());
}
