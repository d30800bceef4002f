#include "poenum/solution_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace poe {

void DeltaSink::push(DeltaRecord rec) {
    total_size_ += rec.size();
    if (records_.empty()) first_size_ = rec.size();
    if (out_) write_delta_record(*out_, rec);
    records_.push_back(std::move(rec));
}

void DeltaSink::emit_set(const std::vector<int>& ids) {
    DeltaRecord rec;
    if (!have_prev_) {
        rec.kind = DeltaRecord::Kind::Full;
        rec.ids = ids;
    } else {
        rec.kind = DeltaRecord::Kind::SetDelta;
        std::set_difference(ids.begin(), ids.end(), prev_.begin(), prev_.end(),
                            std::back_inserter(rec.ids));
        std::set_difference(prev_.begin(), prev_.end(), ids.begin(), ids.end(),
                            std::back_inserter(rec.removals));
    }
    prev_ = ids;
    have_prev_ = true;
    ++emitted_;
    push(std::move(rec));
}

void DeltaSink::emit_sequence(const std::vector<int>& seq) {
    DeltaRecord rec;
    if (!have_prev_) {
        rec.kind = DeltaRecord::Kind::Full;
        rec.ids = seq;
    } else {
        std::size_t k = 0;
        while (k < seq.size() && k < prev_.size() && seq[k] == prev_[k]) ++k;
        rec.kind = DeltaRecord::Kind::SeqDelta;
        rec.keep = (int)k;
        rec.ids.assign(seq.begin() + k, seq.end());
    }
    prev_ = seq;
    have_prev_ = true;
    ++emitted_;
    push(std::move(rec));
}

void FullPrintSink::on_emit(const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) out_ << (i ? " " : "") << s[i];
    out_ << "\n";
    ++emitted_;
}

void write_delta_record(std::ostream& out, const DeltaRecord& rec) {
    switch (rec.kind) {
        case DeltaRecord::Kind::Full:
            out << "=";
            for (int x : rec.ids) out << " " << x;
            break;
        case DeltaRecord::Kind::SetDelta:
            out << "+";
            for (int x : rec.ids) out << " " << x;
            out << " / -";
            for (int x : rec.removals) out << " " << x;
            break;
        case DeltaRecord::Kind::SeqDelta:
            out << "~ " << rec.keep;
            for (int x : rec.ids) out << " " << x;
            break;
    }
    out << "\n";
}

std::vector<DeltaRecord> read_delta_stream(std::istream& in) {
    std::vector<DeltaRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        DeltaRecord rec;
        if (tag == "=") {
            rec.kind = DeltaRecord::Kind::Full;
            int x;
            while (ls >> x) rec.ids.push_back(x);
        } else if (tag == "+") {
            rec.kind = DeltaRecord::Kind::SetDelta;
            std::string tok;
            bool removing = false;
            while (ls >> tok) {
                if (tok == "/") continue;
                if (tok == "-") { removing = true; continue; }
                int x = std::stoi(tok);
                (removing ? rec.removals : rec.ids).push_back(x);
            }
        } else if (tag == "~") {
            rec.kind = DeltaRecord::Kind::SeqDelta;
            if (!(ls >> rec.keep)) throw delta_error("missing keep-prefix length");
            int x;
            while (ls >> x) rec.ids.push_back(x);
        } else {
            throw delta_error("unknown delta tag '" + tag + "'");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<std::vector<int>> decode_deltas(const std::vector<DeltaRecord>& stream) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const DeltaRecord& rec = stream[i];
        switch (rec.kind) {
            case DeltaRecord::Kind::Full:
                cur = rec.ids;
                break;
            case DeltaRecord::Kind::SetDelta: {
                if (i == 0) throw delta_error("set delta before any full record");
                std::vector<int> next;
                std::set_difference(cur.begin(), cur.end(),
                                    rec.removals.begin(), rec.removals.end(),
                                    std::back_inserter(next));
                if (next.size() + rec.removals.size() != cur.size())
                    throw delta_error("delta removes an absent id");
                std::vector<int> merged;
                std::set_union(next.begin(), next.end(), rec.ids.begin(), rec.ids.end(),
                               std::back_inserter(merged));
                cur = std::move(merged);
                break;
            }
            case DeltaRecord::Kind::SeqDelta: {
                if (i == 0) throw delta_error("sequence delta before any full record");
                if (rec.keep > (int)cur.size()) throw delta_error("keep-prefix exceeds previous length");
                cur.resize(rec.keep);
                cur.insert(cur.end(), rec.ids.begin(), rec.ids.end());
                break;
            }
        }
        out.push_back(cur);
    }
    return out;
}

}  // namespace poe
