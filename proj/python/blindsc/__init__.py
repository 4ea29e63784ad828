"""Blind signcryption over prime-order subgroups of Z_p^*.

Integers are plain Python ints, messages and ciphertexts are bytes. Session
objects returned by the ``*_commit`` and ``*_challenge`` calls are one-shot
handles; using one twice raises ``BlindscError`` with ``code == "InvalidState"``.
"""

from ._core import (
    BlindscError,
    BscRequesterSession,
    KeyPair,
    Params,
    RequesterSession,
    Rng,
    SignerSession,
    Suite,
    armor,
    blind_challenge,
    blind_finalize,
    blind_verify,
    bsc_challenge,
    bsc_finalize,
    bsc_unsigncrypt,
    cross_pairing,
    dearmor,
    decode_commit,
    default_bind_info,
    encode_commit,
    exponentiation_count,
    exponentiation_counts,
    keygen,
    keypair_from_secret,
    sdss_sign,
    sdss_verify,
    signer_commit,
    signer_respond,
    tamper,
    zheng_signcrypt,
    zheng_unsigncrypt,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
