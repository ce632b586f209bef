from vcloud.vcloud_mpc.client.client_kit import (
    ClientLedger,
    ClientSecrets,
    OutputExpectation,
    Verdict,
    derive_garbled_input,
    derive_garbled_inputs,
    expect_outputs,
    lambda_candidates,
    recover_and_verify,
    setup,
)
from vcloud.vcloud_mpc.client.session import CloudSession, SessionResult

__all__ = [
    "ClientLedger",
    "ClientSecrets",
    "CloudSession",
    "OutputExpectation",
    "SessionResult",
    "Verdict",
    "derive_garbled_input",
    "derive_garbled_inputs",
    "expect_outputs",
    "lambda_candidates",
    "recover_and_verify",
    "setup",
]
