#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blindsc/error.hpp"
#include "blindsc/harness.hpp"
#include "blindsc/wire.hpp"

namespace py = pybind11;
using namespace blindsc;

namespace {

// Python ints cross the boundary as hex text, which both sides parse natively.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str(16).c_str(), nullptr, 16));
}

BigInt from_py(const py::int_& v) {
  if (PyObject_RichCompareBool(v.ptr(), py::int_(0).ptr(), Py_LT) == 1) {
    throw py::value_error("negative integers are not group values");
  }
  return BigInt(py::str(v).cast<std::string>(), 10);
}

Bytes to_bytes_arg(const py::bytes& b) {
  std::string_view s = b;
  return Bytes(s.begin(), s.end());
}

py::bytes to_py_bytes(const Bytes& b) { return py::bytes(reinterpret_cast<const char*>(b.data()), b.size()); }

Scalar scalar(const py::int_& v) { return Scalar(from_py(v)); }
GroupElement element(const py::int_& v) { return GroupElement(from_py(v)); }

py::tuple blind_sig_tuple(const blind::Signature& s) { return py::make_tuple(to_py(s.r.value()), to_py(s.s.value()), to_py(s.T.value())); }

// Owns whichever randomness source Python asked for.
class PyRng {
 public:
  explicit PyRng(std::unique_ptr<RandomSource> src) : src_(std::move(src)) {}
  RandomSource& get() { return *src_; }

 private:
  std::unique_ptr<RandomSource> src_;
};

harness::Scheme scheme_of(const std::string& name) {
  if (name == "bsc") return harness::Scheme::BlindSigncrypt;
  if (name == "blind") return harness::Scheme::BlindSdss;
  throw py::value_error("scheme must be 'bsc' or 'blind'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Blind signcryption over prime-order subgroups";

  // The module keeps the class alive; this extra reference is never dropped.
  static PyObject* error_type = py::exception<Error>(m, "BlindscError").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      inst.attr("code") = py::str(std::string(errc_name(e.code())));
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  py::class_<PyRng>(m, "Rng")
      .def_static("os", [] { return PyRng(std::make_unique<OsRandom>()); })
      .def_static(
          "seeded", [](std::uint64_t seed, const std::string& label) { return PyRng(std::make_unique<SeededRandom>(seed, label)); },
          py::arg("seed"), py::arg("label") = "")
      .def_static("scripted", [](const std::vector<py::int_>& values) {
        std::deque<BigInt> script;
        for (const auto& v : values) script.push_back(from_py(v));
        return PyRng(std::make_unique<ScriptedRandom>(std::move(script)));
      });

  py::class_<GroupParams>(m, "Params")
      .def_static("toy23", [] { return toy23(); })
      .def_static("desk512", [] { return desk512(); })
      .def_static("builtin", [](const std::string& name) { return builtin_params(name); })
      .def_static("validate", [](const py::int_& p, const py::int_& q, const py::int_& g) {
        return validate_params({from_py(p), from_py(q), from_py(g)});
      })
      .def_static(
          "generate", [](std::size_t bits_p, std::size_t bits_q, PyRng& rng) { return generate_params(bits_p, bits_q, rng.get()); },
          py::arg("bits_p"), py::arg("bits_q"), py::arg("rng"))
      .def_property_readonly("p", [](const GroupParams& gp) { return to_py(gp.p()); })
      .def_property_readonly("q", [](const GroupParams& gp) { return to_py(gp.q()); })
      .def_property_readonly("g", [](const GroupParams& gp) { return to_py(gp.g().value()); });

  py::class_<CryptoSuite>(m, "Suite")
      .def_static("by_id", &suite_by_id)
      .def_property_readonly("id", [](const CryptoSuite& s) { return std::string(s.id()); });

  py::class_<KeyPair>(m, "KeyPair")
      .def_property_readonly("x", [](const KeyPair& k) { return to_py(k.x.value()); })
      .def_property_readonly("y", [](const KeyPair& k) { return to_py(k.y.value()); });

  m.def("keygen", [](const GroupParams& gp, PyRng& rng) { return keygen(gp, rng.get()); });
  m.def("keypair_from_secret", [](const py::int_& x, const GroupParams& gp) { return keypair_from_secret(scalar(x), gp); });
  m.def("default_bind_info", [](const py::int_& y, const GroupParams& gp) { return to_py_bytes(default_bind_info(element(y), gp)); });
  m.def("exponentiation_count", &exponentiation_count);

  // SDSS and Zheng
  m.def("sdss_sign", [](const py::bytes& msg, const KeyPair& k, const GroupParams& gp, const CryptoSuite& s, PyRng& rng) {
    auto sig = sdss::sign(to_bytes_arg(msg), k, gp, s, rng.get());
    return py::make_tuple(to_py(sig.r.value()), to_py(sig.s.value()));
  });
  m.def("sdss_verify", [](const py::bytes& msg, const py::int_& r, const py::int_& s_, const py::int_& y,
                          const GroupParams& gp, const CryptoSuite& s) {
    return sdss::verify(to_bytes_arg(msg), {scalar(r), scalar(s_)}, element(y), gp, s);
  });
  m.def("zheng_signcrypt", [](const py::bytes& msg, const KeyPair& sender, const py::int_& to, const py::bytes& bind,
                              const GroupParams& gp, const CryptoSuite& s, PyRng& rng) {
    auto ct = zheng::signcrypt(to_bytes_arg(msg), sender, element(to), to_bytes_arg(bind), gp, s, rng.get());
    return py::make_tuple(to_py_bytes(ct.c), to_py(ct.r.value()), to_py(ct.s.value()));
  });
  m.def("zheng_unsigncrypt", [](const py::bytes& c, const py::int_& r, const py::int_& s_, const KeyPair& recipient,
                                const py::int_& from, const py::bytes& bind, const GroupParams& gp, const CryptoSuite& s) {
    zheng::SigncryptedText ct{to_bytes_arg(c), scalar(r), scalar(s_)};
    return to_py_bytes(zheng::unsigncrypt(ct, recipient, element(from), to_bytes_arg(bind), gp, s));
  });

  // Blind protocol steps. Sessions are opaque handles.
  py::class_<blind::SignerSession>(m, "SignerSession");
  py::class_<blind::RequesterSession>(m, "RequesterSession")
      .def_property_readonly("u", [](const blind::RequesterSession& r) { return to_py(r.blinding().u.value()); });
  py::class_<bsc::RequesterSession>(m, "BscRequesterSession")
      .def_property_readonly("u", [](const bsc::RequesterSession& r) { return to_py(r.blinding().u.value()); });

  m.def("signer_commit", [](const GroupParams& gp, PyRng& rng) {
    auto [session, commit] = blind::signer_commit(gp, rng.get());
    return py::make_tuple(std::move(session), to_py(commit.z.value()));
  });
  m.def("signer_respond", [](blind::SignerSession& session, const py::int_& r_bar, const KeyPair& k, const GroupParams& gp) {
    return to_py(blind::signer_respond(session, {scalar(r_bar)}, k, gp).s_bar.value());
  });
  m.def("blind_challenge", [](const py::bytes& msg, const py::int_& z, const GroupParams& gp, const CryptoSuite& s, PyRng& rng) {
    auto [session, ch] = blind::requester_challenge(to_bytes_arg(msg), {element(z)}, gp, s, rng.get());
    return py::make_tuple(std::move(session), to_py(ch.r_bar.value()));
  });
  m.def("blind_finalize", [](blind::RequesterSession& session, const py::int_& s_bar, const GroupParams& gp) {
    return blind_sig_tuple(blind::requester_finalize(session, {scalar(s_bar)}, gp));
  });
  m.def("blind_verify", [](const py::bytes& msg, const py::int_& r, const py::int_& s_, const py::int_& t,
                           const py::int_& y, const GroupParams& gp, const CryptoSuite& s) {
    return blind::verify(to_bytes_arg(msg), {scalar(r), scalar(s_), element(t)}, element(y), gp, s);
  });
  m.def("bsc_challenge", [](const py::bytes& msg, const py::int_& z, const py::int_& recipient, const py::bytes& bind,
                            const GroupParams& gp, const CryptoSuite& s, PyRng& rng) {
    auto [session, ch] = bsc::requester_challenge(to_bytes_arg(msg), {element(z)}, element(recipient),
                                                  to_bytes_arg(bind), gp, s, rng.get());
    return py::make_tuple(std::move(session), to_py(ch.r_bar.value()));
  });
  m.def("bsc_finalize", [](bsc::RequesterSession& session, const py::int_& s_bar, const GroupParams& gp) {
    auto ct = bsc::requester_finalize(session, {scalar(s_bar)}, gp);
    return py::make_tuple(to_py_bytes(ct.c), to_py(ct.r.value()), to_py(ct.s.value()), to_py(ct.T.value()));
  });
  m.def("bsc_unsigncrypt", [](const py::bytes& c, const py::int_& r, const py::int_& s_, const py::int_& t,
                              const KeyPair& recipient, const py::int_& from, const py::bytes& bind,
                              const GroupParams& gp, const CryptoSuite& s) {
    bsc::SigncryptedText ct{to_bytes_arg(c), scalar(r), scalar(s_), element(t)};
    return to_py_bytes(bsc::unsigncrypt(ct, recipient, element(from), to_bytes_arg(bind), gp, s));
  });

  // Harness
  m.def(
      "cross_pairing",
      [](std::size_t n, const std::string& scheme, const GroupParams& gp, const CryptoSuite& s, PyRng& rng) {
        auto run = harness::run_honest_sessions(n, scheme_of(scheme), gp, s, rng.get());
        auto report = harness::cross_pairing_check(run.transcripts, gp);
        return py::make_tuple(report.passed(), report.n * report.n);
      },
      py::arg("n"), py::arg("scheme"), py::arg("params"), py::arg("suite"), py::arg("rng"));
  m.def(
      "tamper",
      [](std::size_t trials, const py::bytes& msg, const GroupParams& gp, const CryptoSuite& s, PyRng& rng) {
        harness::SessionConfig cfg;
        cfg.messages = {to_bytes_arg(msg)};
        auto run = harness::run_honest_sessions(1, harness::Scheme::BlindSigncrypt, gp, s, rng.get(), cfg);
        auto report = harness::tamper_suite(run, run.transcripts[0], trials, rng.get(), gp, s);
        py::dict out;
        out["trials"] = report.trials;
        out["rejections"] = report.rejections;
        out["control_accepted"] = report.control_accepted;
        return out;
      },
      py::arg("trials"), py::arg("message"), py::arg("params"), py::arg("suite"), py::arg("rng"));
  m.def("exponentiation_counts", [](const std::string& scheme, const GroupParams& gp, const CryptoSuite& s, PyRng& rng) {
    auto c = harness::count_exponentiations(scheme_of(scheme), gp, s, rng.get());
    py::dict out;
    out["A"] = c.party_a();
    out["B"] = c.party_b();
    out["C"] = c.party_c();
    return out;
  });

  // Wire helpers for the message types the protocol exchanges.
  m.def("armor", [](const py::bytes& encoded) { return wire::armor(to_bytes_arg(encoded)); });
  m.def("dearmor", [](const std::string& text) { return to_py_bytes(wire::dearmor(text)); });
  m.def("encode_commit", [](const py::int_& z, const std::string& suite_id) {
    return to_py_bytes(wire::encode({suite_id, blind::CommitMsg{element(z)}}));
  });
  m.def("decode_commit", [](const py::bytes& data) {
    auto env = wire::decode(to_bytes_arg(data));
    const auto* c = std::get_if<blind::CommitMsg>(&env.value);
    if (!c) throw Error(Errc::UnknownType, "not a commitment");
    return py::make_tuple(env.suite_id, to_py(c->z.value()));
  });
}
