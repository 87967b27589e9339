#include "apolar/report_json.hpp"

namespace apolar {

OrderedJson hilbert_to_json(const HilbertSeq& h) { return OrderedJson(h.values); }

OrderedJson report_to_json(const PencilReport& report) {
    OrderedJson j;
    j["H_F"] = report.h_f.values;
    j["H_G"] = report.h_g.values;
    j["H_A"] = report.h_a.values;
    j["d"] = report.d;
    j["t"] = report.t;
    j["H_gen"] = report.h_gen.values;

    OrderedJson specials = OrderedJson::array();
    for (const PencilPoint& p : report.special_fibers) {
        OrderedJson s;
        s["lambda"] = p.lambda.to_string();
        s["H"] = p.h.values;
        specials.push_back(s);
    }
    j["special_lambdas"] = specials;

    OrderedJson verdicts;
    {
        OrderedJson t1;
        t1["ok"] = report.theorem1.ok;
        OrderedJson margins = OrderedJson::array();
        for (const Theorem1Margin& m : report.theorem1.margins) {
            OrderedJson mj;
            mj["u"] = m.u;
            mj["i"] = m.i;
            mj["lower_margin"] = m.lower_margin;
            mj["upper_margin_min"] = m.upper_margin_min;
            margins.push_back(mj);
        }
        t1["margins"] = margins;
        verdicts["theorem1"] = t1;

        OrderedJson t2;
        t2["ok"] = report.theorem2_ok;
        t2["bounds"] = report.theorem2_bounds;
        verdicts["theorem2"] = t2;

        OrderedJson cor;
        cor["hypotheses_met"] = report.corollary.hypotheses_met;
        cor["generic_partial_count"] = report.corollary.generic_partial_count;
        cor["required"] = report.corollary.required;
        cor["ok"] = report.corollary.ok;
        verdicts["corollary_partials"] = cor;

        verdicts["level"] = report.level_ok;
        verdicts["socle_type"] = report.socle;
    }
    j["verdicts"] = verdicts;

    OrderedJson sampling;
    sampling["seed"] = report.seed;
    sampling["samples"] = report.samples;
    sampling["exhaustive"] = report.exhaustive;
    sampling["sampled_only"] = report.sampled_only;
    sampling["genericity_warning"] = report.genericity_warning;
    sampling["small_field_caveat"] = report.small_field_caveat;
    j["sampling"] = sampling;
    return j;
}

}  // namespace apolar
