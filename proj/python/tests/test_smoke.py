import pytest

import blindsc as b


@pytest.fixture(scope="module")
def desk():
    return b.Params.desk512()


@pytest.fixture(scope="module")
def std():
    return b.Suite.by_id("std-v1")


def test_builtin_params():
    toy = b.Params.toy23()
    assert (toy.p, toy.q, toy.g) == (23, 11, 2)
    desk = b.Params.desk512()
    assert desk.p.bit_length() == 512
    assert desk.q.bit_length() == 160
    assert (desk.p - 1) % desk.q == 0
    assert pow(desk.g, desk.q, desk.p) == 1


def test_validate_rejects_bad_generator():
    with pytest.raises(b.BlindscError) as err:
        b.Params.validate(23, 11, 5)
    assert err.value.code == "BadGenerator"


def test_keys_and_scripted_commit():
    toy = b.Params.toy23()
    assert b.keypair_from_secret(3, toy).y == pow(2, 3, 23) == 8
    _, z = b.signer_commit(toy, b.Rng.scripted([5]))
    assert z == pow(2, 5, 23) == 9


def test_sdss_roundtrip_and_tamper(desk, std):
    rng = b.Rng.seeded(1)
    key = b.keygen(desk, rng)
    r, s = b.sdss_sign(b"pay 10", key, desk, std, rng)
    assert b.sdss_verify(b"pay 10", r, s, key.y, desk, std)
    assert not b.sdss_verify(b"pay 11", r, s, key.y, desk, std)
    assert not b.sdss_verify(b"pay 10", r, (s + 1) % desk.q, key.y, desk, std)


def test_zheng_roundtrip_and_wrong_key(desk, std):
    rng = b.Rng.seeded(2)
    alice, bob, eve = (b.keygen(desk, rng) for _ in range(3))
    bind = b.default_bind_info(bob.y, desk)
    c, r, s = b.zheng_signcrypt(b"meet at noon", alice, bob.y, bind, desk, std, rng)
    assert b.zheng_unsigncrypt(c, r, s, bob, alice.y, bind, desk, std) == b"meet at noon"
    with pytest.raises(b.BlindscError) as err:
        b.zheng_unsigncrypt(c, r, s, eve, alice.y, bind, desk, std)
    assert err.value.code == "TagMismatch"


def finalize_with_retry(run_once):
    for _ in range(8):
        try:
            return run_once()
        except b.BlindscError as e:
            if e.code != "DegenerateDenominator":
                raise
    raise AssertionError("no session completed")


def test_blind_sdss_session(desk, std):
    rng = b.Rng.seeded(3)
    signer = b.keygen(desk, rng)

    def once():
        session, z = b.signer_commit(desk, rng)
        req, r_bar = b.blind_challenge(b"coin", z, desk, std, rng)
        s_bar = b.signer_respond(session, r_bar, signer, desk)
        with pytest.raises(b.BlindscError) as err:
            b.signer_respond(session, r_bar, signer, desk)
        assert err.value.code == "InvalidState"
        return b.blind_finalize(req, s_bar, desk)

    r, s, T = finalize_with_retry(once)
    assert b.blind_verify(b"coin", r, s, T, signer.y, desk, std)
    assert not b.blind_verify(b"coin!", r, s, T, signer.y, desk, std)


def test_blind_signcryption_round(desk, std):
    rng = b.Rng.seeded(4)
    signer, recipient = b.keygen(desk, rng), b.keygen(desk, rng)
    bind = b.default_bind_info(recipient.y, desk)
    p, q, g = desk.p, desk.q, desk.g
    msg = b"sealed bid: 42"

    def once():
        session, z = b.signer_commit(desk, rng)
        req, r_bar = b.bsc_challenge(msg, z, recipient.y, bind, desk, std, rng)
        s_bar = b.signer_respond(session, r_bar, signer, desk)
        return req.u, b.bsc_finalize(req, s_bar, desk)

    u, (c, r, s, T) = finalize_with_retry(once)
    # Key agreement, checked with Python's own modular arithmetic.
    base = signer.y * T * pow(g, r, p) % p
    assert pow(recipient.y, u, p) == pow(base, s * recipient.x % q, p)
    assert b.bsc_unsigncrypt(c, r, s, T, recipient, signer.y, bind, desk, std) == msg
    with pytest.raises(b.BlindscError):
        b.bsc_unsigncrypt(c, r, s, T ^ 1, recipient, signer.y, bind, desk, std)


def test_harness_properties(desk, std):
    passed, total = b.cross_pairing(8, "bsc", desk, std, b.Rng.seeded(5))
    assert (passed, total) == (64, 64)
    report = b.tamper(100, b"tamper target message", desk, std, b.Rng.seeded(6))
    assert report == {"trials": 100, "rejections": 100, "control_accepted": True}
    assert b.exponentiation_counts("bsc", desk, std, b.Rng.seeded(7)) == {"A": 1, "B": 3, "C": 2}


def test_wire_commit_and_armor():
    enc = b.encode_commit(9, "toy-v1")
    assert enc == b"BSC1\x03\x00\x06toy-v1\x00\x01\x09"
    assert b.decode_commit(enc) == ("toy-v1", 9)
    text = b.armor(enc)
    assert text.startswith("-----BEGIN BSC1 COMMIT-----\n")
    assert b.dearmor(text) == enc
    with pytest.raises(b.BlindscError) as err:
        b.decode_commit(enc + b"\x00")
    assert err.value.code == "TrailingBytes"
