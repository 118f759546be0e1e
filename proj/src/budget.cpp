#include "pn/budget.hpp"

#include "pn/errors.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

namespace pn {

namespace {

double parse_number(std::string_view key, std::string_view text) {
  std::string owned(text);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw_invalid("budget: bad value for '" + std::string(key) + "': " + owned);
  }
  if (used != owned.size() || value < 0) {
    throw_invalid("budget: bad value for '" + std::string(key) + "': " + owned);
  }
  return value;
}

}  // namespace

Budget Budget::parse(std::string_view spec) {
  Budget out;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw_invalid("budget: expected key=value, got '" + std::string(item) + "'");
    auto key = item.substr(0, eq);
    double value = parse_number(key, item.substr(eq + 1));
    if (key == "entries") {
      out.max_entries = static_cast<std::size_t>(value);
    } else if (key == "bits") {
      out.max_bits = static_cast<std::size_t>(value);
    } else if (key == "seconds") {
      out.max_seconds = value;
    } else {
      throw_invalid("budget: unknown key '" + std::string(key) + "'");
    }
  }
  return out;
}

std::string Budget::to_string() const {
  std::ostringstream os;
  os << "entries=" << max_entries << ",bits=" << max_bits << ",seconds=" << max_seconds;
  return os.str();
}

BudgetMeter::BudgetMeter(const Budget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {}

void BudgetMeter::check_entries(std::size_t live_entries) const {
  if (live_entries > budget_.max_entries) {
    throw_resource("entry budget exceeded: " + std::to_string(live_entries) + " > " +
                   std::to_string(budget_.max_entries));
  }
}

void BudgetMeter::check_bits(std::size_t bits) const {
  if (bits > budget_.max_bits) {
    throw_resource("bit-size budget exceeded: " + std::to_string(bits) + " > " +
                   std::to_string(budget_.max_bits));
  }
}

void BudgetMeter::tick() {
  if (budget_.max_seconds <= 0) return;
  if ((++ticks_ & 1023u) != 0) return;
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
  if (elapsed.count() > budget_.max_seconds) {
    throw_resource("time budget exceeded: " + std::to_string(budget_.max_seconds) + " s");
  }
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  std::vector<std::exception_ptr> errors(count);
  unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard lock(mu);
          if (next >= count) return;
          i = next++;
        }
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace pn
