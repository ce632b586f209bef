from vcloud.vcloud_mpc.cost_model.formulas import (
    RandomBits,
    bprime_counts,
    client_bits,
    entry_ot_count,
    entry_traffic,
    fhe_ciphertext_bits,
    garbled_value_bits,
    gc_size,
    megabits,
    megabytes,
    ot_sizes,
    random_bits,
    seed_bits,
    seed_traffic,
)
from vcloud.vcloud_mpc.cost_model.predict import (
    analysis_rows,
    circuit_ot_count,
    cost_params,
    predict_ledger,
    predict_random_bits,
    write_analysis_csv,
)

__all__ = [
    "RandomBits",
    "analysis_rows",
    "bprime_counts",
    "circuit_ot_count",
    "client_bits",
    "cost_params",
    "entry_ot_count",
    "entry_traffic",
    "fhe_ciphertext_bits",
    "garbled_value_bits",
    "gc_size",
    "megabits",
    "megabytes",
    "ot_sizes",
    "predict_ledger",
    "predict_random_bits",
    "random_bits",
    "seed_bits",
    "seed_traffic",
    "write_analysis_csv",
]
