#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace curator {

struct ChatMessage {
    std::string role;  // system | user | assistant
    std::string content;
};

struct ChatRequest {
    std::string model;
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    int max_tokens = 4096;
};

struct EmbeddingVector {
    std::vector<float> values;

    std::size_t dim() const { return values.size(); }
};

struct GatewayConfig {
    std::string base_url;
    std::string api_key_env = "CURATOR_API_KEY";
    int max_inflight = 8;
    int embed_batch = 64;
    std::string chat_model = "default";
    std::string embed_model = "default-embed";
    int retry_max_attempts = 5;
    int retry_base_ms = 1000;   // doubles per attempt
    int timeout_ms = 120000;
};

/// The single boundary to chat-completion and embedding services.
class LlmGateway {
public:
    virtual ~LlmGateway() = default;

    /// Assistant message content of the first choice.
    virtual std::string chat(const ChatRequest& request) = 0;

    /// One vector per input, order-preserving; all dims equal within a run.
    virtual std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) = 0;
};

/// Raw wire reply; status 0 with network_error=true means no HTTP response.
struct TransportReply {
    int status = 0;
    std::string body;
    bool network_error = false;
};

/// One POST to the service. ServiceGateway layers retries, the concurrency
/// bound, and body (de)serialization on top of this.
class Transport {
public:
    virtual ~Transport() = default;
    virtual TransportReply post(const std::string& path, const std::string& body) = 0;
};

std::unique_ptr<Transport> make_http_transport(const GatewayConfig& config);

/// Production gateway: bounded concurrency, exponential-backoff retries on
/// transient statuses (408/429/5xx and network errors), hard failure on the
/// rest. Thread-safe.
class ServiceGateway : public LlmGateway {
public:
    ServiceGateway(std::unique_ptr<Transport> transport, GatewayConfig config);

    std::string chat(const ChatRequest& request) override;
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;

    std::uint64_t chat_requests() const { return chat_requests_; }
    std::uint64_t embed_requests() const { return embed_requests_; }

private:
    TransportReply post_with_retry(const std::string& path, const std::string& body);

    std::unique_ptr<Transport> transport_;
    GatewayConfig config_;

    std::mutex mu_;
    std::condition_variable cv_;
    int inflight_ = 0;

    std::mutex dim_mu_;
    std::size_t embed_dim_ = 0;  // 0 until first embedding reply

    std::uint64_t chat_requests_ = 0;
    std::uint64_t embed_requests_ = 0;
};

/// Deterministic unit-norm vector derived from (text, seed). Identical text
/// always maps to the identical vector, giving stable cosine geometry.
EmbeddingVector hash_embedding(std::string_view text, std::size_t dim, std::uint64_t seed);

/// In-process gateway for tests and offline runs: hash embedder plus a
/// pluggable chat responder. Thread-safe.
class MockLlmGateway : public LlmGateway {
public:
    using Responder = std::function<std::string(const ChatRequest&)>;

    explicit MockLlmGateway(Responder responder = default_responder(),
                            std::size_t embed_dim = 64, std::uint64_t seed = 0);

    std::string chat(const ChatRequest& request) override;
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;

    std::uint64_t chat_calls() const;
    std::uint64_t embed_calls() const;

    /// Handles every prompt kind the pipeline issues (classification, quality
    /// rubric, correctness judging, correction, generation) with responses
    /// that are a pure function of the prompt text.
    static Responder default_responder();

private:
    Responder responder_;
    std::size_t embed_dim_;
    std::uint64_t seed_;
    mutable std::mutex mu_;
    std::uint64_t chat_calls_ = 0;
    std::uint64_t embed_calls_ = 0;
};

}  // namespace curator
