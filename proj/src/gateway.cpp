#include "curator/gateway.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include <json.hpp>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "curator/errors.hpp"
#include "curator/taxonomy.hpp"
#include "curator/text.hpp"

namespace curator {

namespace {

void validate_request(const ChatRequest& r) {
    if (r.messages.empty()) throw ValueError("chat request has no messages");
    const auto& first = r.messages.front().role;
    if (first != "system" && first != "user") {
        throw ValueError("first message role must be system or user, got: " + first);
    }
    if (r.temperature < 0.0) throw ValueError("temperature must be >= 0");
    if (r.max_tokens <= 0) throw ValueError("max_tokens must be positive");
}

std::string chat_body(const ChatRequest& r) {
    nlohmann::ordered_json j;
    j["model"] = r.model;
    auto msgs = nlohmann::ordered_json::array();
    for (const auto& m : r.messages) {
        msgs.push_back({{"role", m.role}, {"content", m.content}});
    }
    j["messages"] = std::move(msgs);
    j["temperature"] = r.temperature;
    j["max_tokens"] = r.max_tokens;
    return j.dump();
}

bool is_retryable(const TransportReply& reply) {
    if (reply.network_error) return true;
    return reply.status == 408 || reply.status == 429 || reply.status >= 500;
}

// Splits "http(s)://host[:port][/prefix]" into origin and path prefix.
std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
    auto scheme_end = base_url.find("://");
    std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    auto path_start = base_url.find('/', host_start);
    if (path_start == std::string::npos) return {base_url, ""};
    std::string prefix = base_url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {base_url.substr(0, path_start), prefix};
}

class HttpTransport : public Transport {
public:
    explicit HttpTransport(const GatewayConfig& config) : config_(config) {
        auto [origin, prefix] = split_base_url(config.base_url);
        origin_ = origin;
        prefix_ = prefix;
        if (const char* key = std::getenv(config.api_key_env.c_str())) {
            api_key_ = key;
        }
    }

    TransportReply post(const std::string& path, const std::string& body) override {
        httplib::Client client(origin_);
        client.set_connection_timeout(config_.timeout_ms / 1000,
                                      (config_.timeout_ms % 1000) * 1000);
        client.set_read_timeout(config_.timeout_ms / 1000,
                                (config_.timeout_ms % 1000) * 1000);
        httplib::Headers headers;
        if (!api_key_.empty()) {
            headers.emplace("Authorization", "Bearer " + api_key_);
        }
        auto res = client.Post(prefix_ + path, headers, body, "application/json");
        if (!res) return {0, "", true};
        return {res->status, res->body, false};
    }

private:
    GatewayConfig config_;
    std::string origin_;
    std::string prefix_;
    std::string api_key_;
};

}  // namespace

std::unique_ptr<Transport> make_http_transport(const GatewayConfig& config) {
    if (config.base_url.empty()) throw ConfigError("gateway.base_url is not set");
    return std::make_unique<HttpTransport>(config);
}

ServiceGateway::ServiceGateway(std::unique_ptr<Transport> transport, GatewayConfig config)
    : transport_(std::move(transport)), config_(std::move(config)) {}

TransportReply ServiceGateway::post_with_retry(const std::string& path,
                                               const std::string& body) {
    TransportReply reply;
    for (int attempt = 1; attempt <= config_.retry_max_attempts; ++attempt) {
        {
            std::unique_lock lock(mu_);
            cv_.wait(lock, [this] { return inflight_ < config_.max_inflight; });
            ++inflight_;
        }
        reply = transport_->post(path, body);
        {
            std::lock_guard lock(mu_);
            --inflight_;
        }
        cv_.notify_one();

        if (reply.status >= 200 && reply.status < 300 && !reply.network_error) {
            return reply;
        }
        if (!is_retryable(reply)) {
            throw GatewayError("gateway request failed with status " +
                                   std::to_string(reply.status),
                               reply.status, /*transient=*/false);
        }
        if (attempt < config_.retry_max_attempts) {
            const auto delay = std::chrono::milliseconds(
                static_cast<std::int64_t>(config_.retry_base_ms) << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
    }
    throw GatewayError("gateway retries exhausted (status " +
                           std::to_string(reply.status) + ")",
                       reply.status, /*transient=*/true);
}

std::string ServiceGateway::chat(const ChatRequest& request) {
    validate_request(request);
    {
        std::lock_guard lock(mu_);
        ++chat_requests_;
    }
    const auto reply = post_with_retry("/chat/completions", chat_body(request));
    try {
        const auto j = nlohmann::json::parse(reply.body);
        return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw GatewayError(std::string("malformed chat reply: ") + e.what(),
                           reply.status, /*transient=*/false);
    }
}

std::vector<EmbeddingVector> ServiceGateway::embed_batch(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    const std::size_t max_batch = static_cast<std::size_t>(std::max(1, config_.embed_batch));

    for (std::size_t start = 0; start < texts.size(); start += max_batch) {
        const std::size_t end = std::min(texts.size(), start + max_batch);
        nlohmann::ordered_json j;
        j["model"] = config_.embed_model;
        j["input"] = std::vector<std::string>(texts.begin() + start, texts.begin() + end);
        {
            std::lock_guard lock(mu_);
            ++embed_requests_;
        }
        const auto reply = post_with_retry("/embeddings", j.dump());
        try {
            const auto parsed = nlohmann::json::parse(reply.body);
            const auto& data = parsed.at("data");
            if (data.size() != end - start) {
                throw ConfigError("embedding reply count mismatch");
            }
            for (const auto& item : data) {
                EmbeddingVector v;
                v.values = item.at("embedding").get<std::vector<float>>();
                std::lock_guard lock(dim_mu_);
                if (embed_dim_ == 0) embed_dim_ = v.dim();
                if (v.dim() != embed_dim_ || v.dim() == 0) {
                    throw ConfigError("embedding dim changed mid-run: " +
                                      std::to_string(v.dim()) + " vs " +
                                      std::to_string(embed_dim_));
                }
                out.push_back(std::move(v));
            }
        } catch (const nlohmann::json::exception& e) {
            throw GatewayError(std::string("malformed embedding reply: ") + e.what(),
                               reply.status, /*transient=*/false);
        }
    }
    return out;
}

EmbeddingVector hash_embedding(std::string_view text, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(text::fnv1a(text) ^ (seed * 0x9E3779B97F4A7C15ull));
    std::normal_distribution<float> normal(0.0f, 1.0f);
    EmbeddingVector v;
    v.values.resize(dim);
    double norm_sq = 0.0;
    for (auto& x : v.values) {
        x = normal(rng);
        norm_sq += static_cast<double>(x) * x;
    }
    const auto norm = static_cast<float>(std::sqrt(norm_sq));
    if (norm > 0.0f) {
        for (auto& x : v.values) x /= norm;
    } else {
        v.values[0] = 1.0f;
    }
    return v;
}

MockLlmGateway::MockLlmGateway(Responder responder, std::size_t embed_dim, std::uint64_t seed)
    : responder_(std::move(responder)), embed_dim_(embed_dim), seed_(seed) {}

std::string MockLlmGateway::chat(const ChatRequest& request) {
    validate_request(request);
    {
        std::lock_guard lock(mu_);
        ++chat_calls_;
    }
    return responder_(request);
}

std::vector<EmbeddingVector> MockLlmGateway::embed_batch(const std::vector<std::string>& texts) {
    {
        std::lock_guard lock(mu_);
        ++embed_calls_;
    }
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) {
        out.push_back(hash_embedding(t, embed_dim_, seed_));
    }
    return out;
}

std::uint64_t MockLlmGateway::chat_calls() const {
    std::lock_guard lock(mu_);
    return chat_calls_;
}

std::uint64_t MockLlmGateway::embed_calls() const {
    std::lock_guard lock(mu_);
    return embed_calls_;
}

namespace {

// Pulls the substituted instruction out of a rendered classification prompt.
std::string_view instruction_slice(std::string_view prompt) {
    static constexpr std::string_view kLead = "According to the ";
    static constexpr std::string_view kTail = ",\nDO NOT PROVIDE";
    const auto a = prompt.rfind(kLead);
    if (a == std::string_view::npos) return prompt;
    const auto start = a + kLead.size();
    const auto b = prompt.find(kTail, start);
    if (b == std::string_view::npos) return prompt.substr(start);
    return prompt.substr(start, b - start);
}

}  // namespace

MockLlmGateway::Responder MockLlmGateway::default_responder() {
    return [](const ChatRequest& request) -> std::string {
        const std::string& prompt = request.messages.back().content;
        const auto h = text::fnv1a(prompt);

        if (prompt.find("classifying") != std::string::npos ||
            prompt.find("classification assistant") != std::string::npos) {
            Domain d = Domain::general;
            if (prompt.find("mathematics expert") != std::string::npos) d = Domain::math;
            else if (prompt.find("programming expert") != std::string::npos) d = Domain::code;
            else if (prompt.find("science expert") != std::string::npos) d = Domain::science;
            const auto& cats = taxonomy_for(d).categories;
            const auto pick = text::fnv1a(instruction_slice(prompt)) % cats.size();
            return "\\boxed{" + cats[pick] + "}";
        }
        if (prompt.find("clarity=") != std::string::npos) {
            const int c = 6 + static_cast<int>(h % 4);
            const int r = 6 + static_cast<int>((h >> 8) % 4);
            const int i = 6 + static_cast<int>((h >> 16) % 4);
            return "clarity=" + std::to_string(c) + "; redundancy=" + std::to_string(r) +
                   "; informativeness=" + std::to_string(i) + "; confident=yes";
        }
        if (prompt.find("\\boxed{correct}") != std::string::npos) {
            return (h % 2 == 0) ? "\\boxed{correct}" : "\\boxed{incorrect}";
        }
        if (prompt.find("failed verification") != std::string::npos) {
            return "Revised solution attempt " + std::to_string(h % 1000) +
                   ". The final answer is \\boxed{" + std::to_string(h % 100) + "}.";
        }
        // Plain generation (student sampling, distillation).
        return "Step-by-step work " + std::to_string(h % 10000) +
               ". Final answer: \\boxed{" + std::to_string(h % 100) + "}";
    };
}

}  // namespace curator
