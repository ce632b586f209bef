app_name = "vcloud"
app_title = "vcloud"
app_publisher = "Kerol Systems"
app_description = "Verifiable multi-server garbled-circuit cloud computing simulator"
app_license = "mit"

# Built-in circuits
# ------------------
# resolved with vcloud.vcloud_mpc.utils.get_attr, selectable as builtin:<name> on the CLI

circuit_builders = {
    "adder": "vcloud.vcloud_mpc.circuits.builders.build_adder",
    "sub": "vcloud.vcloud_mpc.circuits.builders.build_sub",
    "manhattan": "vcloud.vcloud_mpc.circuits.builders.build_manhattan",
    "manhattan-swap": "vcloud.vcloud_mpc.circuits.builders.build_manhattan_swap",
    "nearest-atm": "vcloud.vcloud_mpc.circuits.builders.build_nearest_atm",
    "adder32": "vcloud.vcloud_mpc.circuits.circuit_format.load_bundled_adder",
}

# Group profiles
# ------------------
# OT groups usable for running the protocol; the 3072-bit profile is accounting-only

group_profiles = {
    "test": "vcloud.vcloud_mpc.oblivious_transfer.group.TEST_GROUP",
    "desk256": "vcloud.vcloud_mpc.oblivious_transfer.group.DESK_GROUP",
}

accounting_profile = {
    "k": 128,
    "p_bits": 3072,
    "modulus_bits": 3072,
}
