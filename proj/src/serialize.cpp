#include "cycloskew/serialize.hpp"

#include <chrono>
#include <ctime>

#include "cycloskew/error.hpp"

namespace cycloskew {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

Json claim_to_json(const ClaimResult& r)
{
    Json j;
    j["label"] = r.claim.label;
    j["mode"] = to_string(r.claim.mode);
    j["predicted_kind"] = to_string(r.claim.kind);
    j["predicted_params"] = to_json(r.claim.params);
    j["predicted"] = format_params(r.claim.kind, r.claim.params);
    j["sets_desc"] = r.claim.sets_desc;
    j["reference_desc"] = r.claim.reference_desc;
    j["suspect"] = r.claim.suspect;
    j["status"] = to_string(r.status);
    j["note"] = r.note;
    j["complement_law"] = optional_json(r.complement_law);
    j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    return j;
}

ClaimResult claim_from_json(const Json& j)
{
    ClaimResult r;
    r.claim.label = j.at("label").get<std::string>();
    r.claim.mode = claim_mode_from_string(j.at("mode").get<std::string>());
    r.claim.kind = kind_from_string(j.at("predicted_kind").get<std::string>());
    r.claim.params = params_from_json(j.at("predicted_params"));
    r.claim.sets_desc = j.at("sets_desc").get<std::string>();
    r.claim.reference_desc = j.at("reference_desc").get<std::string>();
    r.claim.suspect = j.at("suspect").get<std::string>();
    r.status = claim_status_from_string(j.at("status").get<std::string>());
    r.note = j.at("note").get<std::string>();
    r.complement_law = optional_from<bool>(j, "complement_law");
    if (!j.at("certificate").is_null()) {
        r.certificate = certificate_from_json(j.at("certificate"));
        r.claim.sets = r.certificate->sets;
    }
    return r;
}

}  // namespace

Json to_json(const FieldSpec& spec)
{
    return Json{{"p", spec.p}, {"m", spec.m}, {"poly", spec.poly}, {"generator", spec.generator}};
}

FieldSpec field_spec_from_json(const Json& j)
{
    FieldSpec spec;
    spec.p = j.at("p").get<std::uint32_t>();
    spec.m = j.at("m").get<std::uint32_t>();
    spec.poly = j.at("poly").get<std::vector<std::uint32_t>>();
    spec.generator = j.at("generator").get<Elem>();
    return spec;
}

Json to_json(const Params& p)
{
    return Json{{"v", p.v}, {"m", p.m}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}, {"t", p.t}};
}

Params params_from_json(const Json& j)
{
    Params p;
    p.v = j.at("v").get<std::int64_t>();
    p.m = j.at("m").get<std::int64_t>();
    p.k = j.at("k").get<std::vector<std::int64_t>>();
    p.lambda = j.at("lambda").get<std::int64_t>();
    p.mu = j.at("mu").get<std::int64_t>();
    p.t = j.at("t").get<std::int64_t>();
    return p;
}

Json to_json(const Certificate& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    j["field"] = to_json(c.field);
    j["sets"] = c.sets;
    j["reference_set"] = c.reference_set;
    j["params"] = to_json(c.params);
    j["pds_type"] = to_string(c.pds_type);
    j["ls_n"] = c.ls_n;
    j["ls_r"] = c.ls_r;
    j["regular"] = c.regular;
    j["trivial"] = c.trivial;
    j["translate_offset"] = optional_json(c.translate_offset);
    j["summary"] = format_params(c.kind, c.params);
    return j;
}

Certificate certificate_from_json(const Json& j)
{
    Certificate c;
    c.kind = kind_from_string(j.at("kind").get<std::string>());
    c.field = field_spec_from_json(j.at("field"));
    c.sets = j.at("sets").get<Family>();
    c.reference_set = j.at("reference_set").get<ElemSet>();
    c.params = params_from_json(j.at("params"));
    c.pds_type = pds_type_from_string(j.at("pds_type").get<std::string>());
    c.ls_n = j.value("ls_n", std::int64_t{0});
    c.ls_r = j.value("ls_r", std::int64_t{0});
    c.regular = j.value("regular", false);
    c.trivial = j.at("trivial").get<bool>();
    c.translate_offset = optional_from<Elem>(j, "translate_offset");
    return c;
}

Json to_json(const Reps& r)
{
    return Json{{"p", r.p},
                {"m", r.m},
                {"q", r.q},
                {"s", optional_json(r.s)},
                {"t", optional_json(r.t)},
                {"x", optional_json(r.x)},
                {"y", optional_json(r.y)},
                {"a", optional_json(r.a)},
                {"b", optional_json(r.b)},
                {"two_quartic", optional_json(r.two_quartic)},
                {"t_signed", r.t_signed},
                {"yb_signed", r.yb_signed}};
}

Reps reps_from_json(const Json& j)
{
    Reps r;
    r.p = j.at("p").get<std::uint32_t>();
    r.m = j.at("m").get<std::uint32_t>();
    r.q = j.at("q").get<std::uint64_t>();
    r.s = optional_from<std::int64_t>(j, "s");
    r.t = optional_from<std::int64_t>(j, "t");
    r.x = optional_from<std::int64_t>(j, "x");
    r.y = optional_from<std::int64_t>(j, "y");
    r.a = optional_from<std::int64_t>(j, "a");
    r.b = optional_from<std::int64_t>(j, "b");
    r.two_quartic = optional_from<bool>(j, "two_quartic");
    r.t_signed = j.at("t_signed").get<bool>();
    r.yb_signed = j.at("yb_signed").get<bool>();
    return r;
}

Json to_json(const Construction& c)
{
    Json j;
    j["recipe"] = c.recipe;
    j["q"] = c.q;
    j["field"] = c.field ? to_json(*c.field) : Json(nullptr);
    j["reps"] = to_json(c.reps);
    j["oracle_verified"] = c.oracle_verified;
    j["version"] = kToolVersion;
    Json claims = Json::array();
    for (const auto& r : c.claims) {
        claims.push_back(claim_to_json(r));
    }
    j["claims"] = std::move(claims);
    return j;
}

Construction construction_from_json(const Json& j)
{
    Construction c;
    c.recipe = j.at("recipe").get<std::string>();
    c.q = j.at("q").get<std::uint64_t>();
    if (!j.at("field").is_null()) {
        c.field = field_spec_from_json(j.at("field"));
    }
    c.reps = reps_from_json(j.at("reps"));
    c.oracle_verified = j.at("oracle_verified").get<bool>();
    for (const auto& claim : j.at("claims")) {
        c.claims.push_back(claim_from_json(claim));
    }
    return c;
}

std::string catalog_line(const Construction& c, const std::string& timestamp)
{
    Json j = to_json(c);
    if (!timestamp.empty()) {
        j["timestamp"] = timestamp;
    }
    return j.dump();
}

Construction parse_catalog_line(const std::string& line)
{
    try {
        return construction_from_json(Json::parse(line));
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("catalog line: ") + e.what());
    }
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace cycloskew
