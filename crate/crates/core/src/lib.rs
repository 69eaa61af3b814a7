pub fn prec_demo() -> u32 { rug::Float::with_val(128, 1.5).prec() }
