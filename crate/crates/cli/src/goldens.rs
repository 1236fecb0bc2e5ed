//! Checked-in outputs for the acceptance instances, keyed by command line.

pub struct Golden {
    pub criterion: u8,
    pub args: &'static str,
    pub file: &'static str,
    pub text: &'static str,
}

macro_rules! golden {
    ($c:expr, $args:expr, $file:literal) => {
        Golden { criterion: $c, args: $args, file: $file, text: include_str!(concat!("../goldens/", $file, ".json")) }
    };
}

pub const GOLDENS: &[Golden] = &[
    golden!(1, "mul --delta 2 goldens/inputs/intro_left.json goldens/inputs/intro_right.json", "01_mul_intro"),
    golden!(2, "verify relations --n 5 --ring Z --delta 0", "02_relations_d0"),
    golden!(2, "verify relations --n 5 --ring Z --delta 3", "02_relations_d3"),
    golden!(3, "verify dimensions --n 5 --ring Z --delta 0", "03_dimensions"),
    golden!(4, "tor --algebra brauer --n 2 --ring Z --delta 0 --maxdeg 2", "04_tor_br2_d0"),
    golden!(4, "tor --algebra brauer --n 2 --ring Z --delta 2 --maxdeg 2", "04_tor_br2_d2"),
    golden!(4, "tor --algebra brauer --n 2 --ring Z --delta 3 --maxdeg 2", "04_tor_br2_d3"),
    golden!(4, "tor --algebra brauer --n 2 --ring Z --delta 5 --maxdeg 2", "04_tor_br2_d5"),
    golden!(
        5,
        "tor --algebra brauer --n 2 --module restricted:3 --ring Z --delta 0 --maxdeg 2",
        "05_tor_restricted_d0"
    ),
    golden!(
        5,
        "tor --algebra brauer --n 2 --module restricted:3 --ring Z --delta 2 --maxdeg 2",
        "05_tor_restricted_d2"
    ),
    golden!(
        5,
        "tor --algebra brauer --n 2 --module restricted:3 --ring Z --delta 3 --maxdeg 2",
        "05_tor_restricted_d3"
    ),
    golden!(6, "homology --target cn --n 5 --ring Z --delta 0", "06_cn5_Z_d0"),
    golden!(6, "homology --target cn --n 5 --ring Z --delta 2", "06_cn5_Z_d2"),
    golden!(6, "homology --target cn --n 6 --ring Q --delta 0", "06_cn6_Q_d0"),
    golden!(6, "homology --target cn --n 6 --ring Q --delta 1", "06_cn6_Q_d1"),
    golden!(7, "homology --target cnk --n 5 --k 1 --ring Z --delta 0", "07_cnk_n5_k1"),
    golden!(7, "homology --target cnk --n 5 --k 2 --j 1 --ring Z --delta 0", "07_cnk_n5_k2_j1"),
    golden!(8, "homology --target w --letters 5 --seps 3 --ring Z --delta 0", "08_w_5_3"),
    golden!(8, "homology --target w --letters 4 --seps 2 --ring Q --delta 0", "08_w_4_2_Q"),
    golden!(9, "verify phi --n 4 --ring Z --delta 0", "09_phi_n4"),
    golden!(10, "verify thm31 --n 3 --set 1,2 --maxdeg 3 --ring Z --delta 0", "10_thm31_12_Z"),
    golden!(10, "verify thm31 --n 3 --set 1,2,3 --maxdeg 3 --ring Q --delta 1", "10_thm31_123_Q"),
    golden!(11, "homology --target inductive --n 3 --set 1,2 --x 1 --maxdeg 4 --ring Q --delta 1", "11_inductive_c"),
    golden!(
        11,
        "homology --target inductive --n 3 --set 1,2 --x 1 --y 3 --maxdeg 4 --ring Z --delta 0",
        "11_inductive_d"
    ),
    golden!(
        11,
        "homology --target inductive --n 3 --set 1,2 --x 1 --maxdeg 4 --tensored --ring Q --delta 1",
        "11_inductive_c_tensored"
    ),
    golden!(12, "verify thm41 --n 3 --m 2 --maxdeg 3 --ring Z --delta 0", "12_thm41"),
    golden!(13, "verify thmA --n 3 --maxdeg 3 --ring Z --delta 1", "13_thmA_Z"),
    golden!(13, "verify thmA --n 3 --maxdeg 3 --ring Q --delta 1", "13_thmA_Q"),
    golden!(14, "verify thmB --n 3 --i 1 --ring Z --delta 0", "14_thmB_n3_i1"),
    golden!(14, "verify thmB --n 2 --i 1 --ring Z --delta 0", "14_thmB_n2_i1"),
    golden!(15, "verify surjection63 --n 3 --i 1 --ring Z --delta 0", "15_surjection_n3_i1"),
    golden!(16, "verify shapiro --n 3 --m 2 --maxdeg 3 --ring Z --delta 0", "16_shapiro"),
];

/// The stored output for a canonical command line.
pub fn lookup(args: &str) -> Option<&'static str> {
    GOLDENS.iter().find(|g| g.args == args).map(|g| g.text)
}
