//! The bundled case-study system: a nine-component system decomposed into
//! elementary components (`level1`), condensed into an acyclic architecture
//! (`level2`) and regrouped for remote computation (`level3`).

use crate::model::{Architecture, ArchitectureBuilder};

const INPUTS: &[(&str, &[&str])] = &[
    ("sA1", &["data1"]),
    ("sA2", &["data2", "data3"]),
    ("sA3", &["data4", "data5"]),
    ("sA4", &["data6", "data7", "data13"]),
    ("sA5", &["data8"]),
    ("sA6", &["data14"]),
    ("sA7", &["data15", "data16"]),
    ("sA8", &["data17", "data18", "data19", "data22"]),
    ("sA9", &["data20", "data21"]),
    ("sA11", &["data1"]),
    ("sA12", &["data1"]),
    ("sA21", &["data2"]),
    ("sA22", &["data2", "data3"]),
    ("sA23", &["data2"]),
    ("sA31", &["data4"]),
    ("sA32", &["data5"]),
    ("sA41", &["data6", "data7"]),
    ("sA42", &["data13"]),
    ("sA71", &["data15"]),
    ("sA72", &["data16"]),
    ("sA81", &["data17", "data22"]),
    ("sA82", &["data18", "data19"]),
    ("sA91", &["data20"]),
    ("sA92", &["data20"]),
    ("sA93", &["data21"]),
    ("sS1", &["data1"]),
    ("sS2", &["data1"]),
    ("sS3", &["data2"]),
    ("sS4", &["data2"]),
    ("sS5", &["data5"]),
    ("sS6", &["data2", "data7"]),
    ("sS7", &["data13"]),
    ("sS8", &["data8"]),
    ("sS9", &["data14"]),
    ("sS10", &["data15"]),
    ("sS11", &["data16"]),
    ("sS12", &["data17"]),
    ("sS13", &["data20"]),
    ("sS14", &["data18", "data19"]),
    ("sS15", &["data21"]),
    ("sS1opt", &["data1"]),
    ("sS4opt", &["data2"]),
    ("sS7opt", &["data13"]),
    ("sS11opt", &["data16", "data19"]),
];

const OUTPUTS: &[(&str, &[&str])] = &[
    ("sA1", &["data2", "data10"]),
    ("sA2", &["data4", "data5", "data11", "data12"]),
    ("sA3", &["data6", "data7"]),
    ("sA4", &["data3", "data8"]),
    ("sA5", &["data9"]),
    ("sA6", &["data15", "data16"]),
    ("sA7", &["data17", "data18"]),
    ("sA8", &["data20", "data21"]),
    ("sA9", &["data22", "data23", "data24"]),
    ("sA11", &["data2"]),
    ("sA12", &["data10"]),
    ("sA21", &["data11"]),
    ("sA22", &["data4", "data12"]),
    ("sA23", &["data5"]),
    ("sA31", &["data6"]),
    ("sA32", &["data7"]),
    ("sA41", &["data3"]),
    ("sA42", &["data8"]),
    ("sA71", &["data17"]),
    ("sA72", &["data18"]),
    ("sA81", &["data20"]),
    ("sA82", &["data21"]),
    ("sA91", &["data22"]),
    ("sA92", &["data23"]),
    ("sA93", &["data24"]),
    ("sS1", &["data10"]),
    ("sS2", &["data2"]),
    ("sS3", &["data11"]),
    ("sS4", &["data5"]),
    ("sS5", &["data7"]),
    ("sS6", &["data12"]),
    ("sS7", &["data8"]),
    ("sS8", &["data9"]),
    ("sS9", &["data15", "data16"]),
    ("sS10", &["data17"]),
    ("sS11", &["data18"]),
    ("sS12", &["data20"]),
    ("sS13", &["data23"]),
    ("sS14", &["data21"]),
    ("sS15", &["data24"]),
    ("sS1opt", &["data2", "data10"]),
    ("sS4opt", &["data12"]),
    ("sS7opt", &["data9"]),
    ("sS11opt", &["data24"]),
];

const VARS: &[(&str, &[&str])] = &[
    ("sA1", &["stA1"]),
    ("sA2", &["stA2"]),
    ("sA3", &[]),
    ("sA4", &["stA4"]),
    ("sA5", &[]),
    ("sA6", &["stA6"]),
    ("sA7", &[]),
    ("sA8", &[]),
    ("sA9", &[]),
    ("sA11", &[]),
    ("sA12", &["stA1"]),
    ("sA21", &[]),
    ("sA22", &["stA2"]),
    ("sA23", &[]),
    ("sA31", &[]),
    ("sA32", &[]),
    ("sA41", &["stA4"]),
    ("sA42", &[]),
    ("sA71", &[]),
    ("sA72", &[]),
    ("sA81", &[]),
    ("sA82", &[]),
    ("sA91", &[]),
    ("sA92", &[]),
    ("sA93", &[]),
    ("sS1", &["stA1"]),
    ("sS2", &[]),
    ("sS3", &[]),
    ("sS4", &[]),
    ("sS5", &[]),
    ("sS6", &["stA2", "stA4"]),
    ("sS7", &[]),
    ("sS8", &[]),
    ("sS9", &["stA6"]),
    ("sS10", &[]),
    ("sS11", &[]),
    ("sS12", &[]),
    ("sS13", &[]),
    ("sS14", &[]),
    ("sS15", &[]),
    ("sS1opt", &["stA1"]),
    ("sS4opt", &["stA2", "stA4"]),
    ("sS7opt", &[]),
    ("sS11opt", &[]),
];

const SUBCOMPONENTS: &[(&str, &[&str])] = &[
    ("sA1", &["sA11", "sA12"]),
    ("sA2", &["sA21", "sA22", "sA23"]),
    ("sA3", &["sA31", "sA32"]),
    ("sA4", &["sA41", "sA42"]),
    ("sA5", &[]),
    ("sA6", &[]),
    ("sA7", &["sA71", "sA72"]),
    ("sA8", &["sA81", "sA82"]),
    ("sA9", &["sA91", "sA92", "sA93"]),
    ("sA11", &[]),
    ("sA12", &[]),
    ("sA21", &[]),
    ("sA22", &[]),
    ("sA23", &[]),
    ("sA31", &[]),
    ("sA32", &[]),
    ("sA41", &[]),
    ("sA42", &[]),
    ("sA71", &[]),
    ("sA72", &[]),
    ("sA81", &[]),
    ("sA82", &[]),
    ("sA91", &[]),
    ("sA92", &[]),
    ("sA93", &[]),
    ("sS1", &["sA12"]),
    ("sS2", &["sA11"]),
    ("sS3", &["sA21"]),
    ("sS4", &["sA23"]),
    ("sS5", &["sA32"]),
    ("sS6", &["sA22", "sA31", "sA41"]),
    ("sS7", &["sA42"]),
    ("sS8", &["sA5"]),
    ("sS9", &["sA6"]),
    ("sS10", &["sA71"]),
    ("sS11", &["sA72"]),
    ("sS12", &["sA81", "sA91"]),
    ("sS13", &["sA92"]),
    ("sS14", &["sA82"]),
    ("sS15", &["sA93"]),
    ("sS1opt", &["sA11", "sA12"]),
    ("sS4opt", &["sA22", "sA23", "sA31", "sA32", "sA41"]),
    ("sS7opt", &["sA42", "sA5"]),
    ("sS11opt", &["sA72", "sA82", "sA93"]),
];

const LEVELS: &[(&str, &[&str])] = &[
    (
        "level0",
        &[
            "sA1", "sA2", "sA3", "sA4", "sA5", "sA6", "sA7", "sA8", "sA9",
        ],
    ),
    (
        "level1",
        &[
            "sA11", "sA12", "sA21", "sA22", "sA23", "sA31", "sA32", "sA41", "sA42", "sA5", "sA6",
            "sA71", "sA72", "sA81", "sA82", "sA91", "sA92", "sA93",
        ],
    ),
    (
        "level2",
        &[
            "sS1", "sS2", "sS3", "sS4", "sS5", "sS6", "sS7", "sS8", "sS9", "sS10", "sS11", "sS12",
            "sS13", "sS14", "sS15",
        ],
    ),
    (
        "level3",
        &[
            "sS1opt", "sS3", "sS4opt", "sS7opt", "sS9", "sS10", "sS11opt", "sS12", "sS13",
        ],
    ),
];

const CHAN_FROM_CH: &[(&str, &[&str])] = &[
    ("data1", &[]),
    ("data2", &["data1"]),
    ("data3", &[]),
    ("data4", &["data2"]),
    ("data5", &["data2"]),
    ("data6", &["data4"]),
    ("data7", &["data5"]),
    ("data8", &["data13"]),
    ("data9", &["data8"]),
    ("data10", &[]),
    ("data11", &["data2"]),
    ("data12", &[]),
    ("data13", &[]),
    ("data14", &[]),
    ("data15", &[]),
    ("data16", &[]),
    ("data17", &["data15"]),
    ("data18", &["data16"]),
    ("data19", &[]),
    ("data20", &["data17", "data22"]),
    ("data21", &["data18", "data19"]),
    ("data22", &["data20"]),
    ("data23", &["data21"]),
    ("data24", &["data20"]),
];

const CHAN_FROM_VAR: &[(&str, &[&str])] = &[
    ("data1", &[]),
    ("data2", &[]),
    ("data3", &["stA4"]),
    ("data4", &["stA2"]),
    ("data5", &[]),
    ("data6", &[]),
    ("data7", &[]),
    ("data8", &[]),
    ("data9", &[]),
    ("data10", &["stA1"]),
    ("data11", &[]),
    ("data12", &["stA2"]),
    ("data13", &[]),
    ("data14", &[]),
    ("data15", &["stA6"]),
    ("data16", &["stA6"]),
    ("data17", &[]),
    ("data18", &[]),
    ("data19", &[]),
    ("data20", &[]),
    ("data21", &[]),
    ("data22", &[]),
    ("data23", &[]),
    ("data24", &[]),
];

const VAR_FROM: &[(&str, &[&str])] = &[
    ("stA1", &["data1"]),
    ("stA2", &["data3"]),
    ("stA4", &["data6", "data7"]),
    ("stA6", &["data14"]),
];

const VAR_TO: &[(&str, &[&str])] = &[
    ("stA1", &["data10"]),
    ("stA2", &["data4", "data12"]),
    ("stA4", &["data3"]),
    ("stA6", &["data15", "data16"]),
];

const HIGHLOAD_CHANNELS: &[&str] = &[
    "data1", "data4", "data5", "data6", "data7", "data8", "data18", "data21",
];

const HIGHPERF_COMPONENTS: &[&str] = &["sA22", "sA23", "sA41", "sA42", "sA72", "sA93"];

fn fill<T: From<&'static str> + Ord>(
    set: &mut std::collections::BTreeSet<T>,
    items: &[&'static str],
) {
    set.extend(items.iter().map(|s| T::from(*s)));
}

/// The case-study system with all of its tables.
pub fn case_study_fixture() -> Architecture {
    let mut b = ArchitectureBuilder::new();
    for (c, xs) in INPUTS {
        fill(&mut b.component(*c).inputs, xs);
    }
    for (c, xs) in OUTPUTS {
        fill(&mut b.component(*c).outputs, xs);
    }
    for (c, vs) in VARS {
        fill(&mut b.component(*c).vars, vs);
    }
    for (c, subs) in SUBCOMPONENTS {
        fill(&mut b.component(*c).subcomponents, subs);
    }
    for (l, members) in LEVELS {
        fill(b.level(*l), members);
    }
    for (x, ys) in CHAN_FROM_CH {
        fill(b.chan_from_ch(*x), ys);
    }
    for (x, vs) in CHAN_FROM_VAR {
        fill(b.chan_from_var(*x), vs);
    }
    for (v, xs) in VAR_FROM {
        fill(b.var_from(*v), xs);
    }
    for (v, xs) in VAR_TO {
        fill(b.var_to(*v), xs);
    }
    fill(b.highload_channels(), HIGHLOAD_CHANNELS);
    fill(b.highperf_components(), HIGHPERF_COMPONENTS);
    b.build().expect("case-study tables are consistent")
}

/// The case-study system in canonical document form.
pub fn case_study_document() -> String {
    crate::ingest::serialize(&case_study_fixture())
}
