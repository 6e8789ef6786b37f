#include "masq/metrics.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace masq {

static const char kHeader[] =
    "round,w_u_liquid,w_u_total,w_a_liquid,w_a_total,mev_made,frontrun,backrun,"
    "tokens_bought_u,tokens_bought_a,epoch";

std::string metrics_to_csv(const MetricsSeries& series) {
    std::ostringstream os;
    os << kHeader << '\n';
    for (const auto& r : series.rounds) {
        os << r.round << ',' << money_to_string(r.w_u_liquid) << ','
           << money_to_string(r.w_u_total) << ',' << money_to_string(r.w_a_liquid) << ','
           << money_to_string(r.w_a_total) << ',' << (r.mev_made ? 1 : 0) << ','
           << (r.frontrun ? 1 : 0) << ',' << (r.backrun ? 1 : 0) << ','
           << r.tokens_bought_u << ',' << r.tokens_bought_a << ',' << r.epoch << '\n';
    }
    return os.str();
}

void write_metrics(const MetricsSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("IoError: cannot write " + path);
    out << metrics_to_csv(series);
}

std::vector<RoundRecord> read_metrics_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("IoError: cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::runtime_error("IoError: bad metrics header in " + path);
    std::vector<RoundRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 11) throw std::runtime_error("IoError: bad metrics row");
        RoundRecord r;
        r.round = std::stoll(cells[0]);
        r.w_u_liquid = money_from_string(cells[1]);
        r.w_u_total = money_from_string(cells[2]);
        r.w_a_liquid = money_from_string(cells[3]);
        r.w_a_total = money_from_string(cells[4]);
        r.mev_made = cells[5] == "1";
        r.frontrun = cells[6] == "1";
        r.backrun = cells[7] == "1";
        r.tokens_bought_u = std::stoll(cells[8]);
        r.tokens_bought_a = std::stoll(cells[9]);
        r.epoch = std::stoll(cells[10]);
        out.push_back(r);
    }
    return out;
}

SummaryStats summarize(const std::vector<RoundRecord>& rounds, const std::string& mode_label) {
    SummaryStats s;
    s.mode_label = mode_label;
    if (!rounds.empty()) {
        s.w_u_final = rounds.back().w_u_total;
        s.w_a_final = rounds.back().w_a_total;
    }
    for (const auto& r : rounds) {
        if (r.mev_made) {
            ++s.mev_rounds;
            if (r.frontrun) ++s.frontrun_rounds;
            if (r.backrun) ++s.backrun_rounds;
        }
    }
    if (s.mev_rounds > 0) {
        s.pct_frontrun = 100.0 * static_cast<double>(s.frontrun_rounds) /
                         static_cast<double>(s.mev_rounds);
        s.pct_backrun = 100.0 * static_cast<double>(s.backrun_rounds) /
                        static_cast<double>(s.mev_rounds);
    }
    return s;
}

std::string summary_to_csv(const std::vector<SummaryStats>& rows) {
    std::ostringstream os;
    os << "mode,w_user_initial,w_user_final,w_adv_initial,w_adv_final,"
          "mev_rounds,pct_frontrun,pct_backrun\n";
    char buf[64];
    for (const auto& s : rows) {
        os << s.mode_label << ',' << money_to_string(s.w_u_initial) << ','
           << money_to_string(s.w_u_final) << ',' << money_to_string(s.w_a_initial) << ','
           << money_to_string(s.w_a_final) << ',' << s.mev_rounds << ',';
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f", s.pct_frontrun, s.pct_backrun);
        os << buf << '\n';
    }
    return os.str();
}

std::string summary_to_text(const std::vector<SummaryStats>& rows) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %14s %14s %14s %14s %10s %10s\n", "mode",
                  "W_user[0]", "W_user[R]", "W_adv[0]", "W_adv[R]", "%frontrun", "%backrun");
    os << line;
    for (const auto& s : rows) {
        std::snprintf(line, sizeof(line), "%-12s %14s %14s %14s %14s %10.2f %10.2f\n",
                      s.mode_label.c_str(), money_to_string(s.w_u_initial).c_str(),
                      money_to_string(s.w_u_final).c_str(),
                      money_to_string(s.w_a_initial).c_str(),
                      money_to_string(s.w_a_final).c_str(), s.pct_frontrun, s.pct_backrun);
        os << line;
    }
    return os.str();
}

}  // namespace masq
