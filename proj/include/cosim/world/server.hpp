#pragma once
// Socket server wrapping a World. Accepts any number of clients; requests
// are serialized at the dispatch boundary so one request fully executes
// before the next. A SHUTDOWN request stops the server after its ack.

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <cosim/wire/registry.hpp>
#include <cosim/wire/transport.hpp>
#include <cosim/world/world.hpp>

namespace cosim::world {

struct WorldServerOptions {
    Scenario initial_scenario;
    std::optional<std::filesystem::path> scenario_dir; // resolves RESET by name
    bool verbose = false;
};

class WorldServer {
public:
    WorldServer(wire::Registry registry, WorldServerOptions options);
    ~WorldServer();

    void start(const wire::Endpoint& endpoint); // throws TransportError
    void stop();
    void wait_shutdown(); // blocks until a SHUTDOWN request lands

    bool running() const { return running_.load(); }

private:
    void accept_loop();
    void client_loop(wire::Connection conn, std::uint64_t client_id);

    wire::Registry registry_;
    WorldServerOptions options_;
    World world_;

    wire::Listener listener_;
    std::thread accept_thread_;
    std::vector<std::thread> client_threads_;
    std::vector<int> client_fds_;
    std::mutex world_mutex_;     // serializes dispatch
    std::mutex threads_mutex_;
    std::mutex fds_mutex_;

    std::atomic<bool> running_{false};
    std::atomic<bool> shutdown_requested_{false};
    std::mutex shutdown_mutex_;
    std::condition_variable shutdown_cv_;
};

} // namespace cosim::world
