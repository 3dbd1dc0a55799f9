#include <CLI11.hpp>

#include <iostream>

#include "crooked/commands.hpp"
#include "crooked/repro.hpp"

using namespace crooked;
using namespace crooked::cli;

namespace {

struct Args {
  std::string scene;
  std::string plane1, plane2, spec;
  std::vector<double> interval;
  std::optional<int> samples;
  DisjointOptions disjoint;
  VerifyOptions verify;
  FoliateOptions foliate;
  CalibrateOptions calibrate;
  MeshOptions mesh;
  std::string repro;
};

SamplingOptions sampling(const Args& a) {
  SamplingOptions s;
  if (!a.interval.empty()) s.interval = std::pair{a.interval[0], a.interval[1]};
  s.samples = a.samples;
  return s;
}

void add_scene(CLI::App* sub, Args& a) {
  sub->add_option("scene", a.scene, "Scene file (- for stdin)")->required();
}

void add_sampling(CLI::App* sub, Args& a) {
  sub->add_option("--spec", a.spec, "Foliation spec name");
  sub->add_option("--interval", a.interval, "Parameter interval LO HI")->expected(2);
  sub->add_option("--samples", a.samples, "Grid size")->check(CLI::Range(2, 100000));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crooked planes and crooked foliations in Minkowski 2+1 space"};
  app.require_subcommand(1);
  Args a;

  auto* classify = app.add_subcommand("classify", "Causal, pair, linear and region classes of a scene");
  add_scene(classify, a);

  auto* disjoint = app.add_subcommand("disjoint", "Decide disjointness of two crooked planes");
  add_scene(disjoint, a);
  disjoint->add_option("plane1", a.plane1, "First plane name");
  disjoint->add_option("plane2", a.plane2, "Second plane name");
  disjoint->add_option("--method", a.disjoint.method, "dg, cone, oracle or all")
      ->check(CLI::IsMember({"dg", "cone", "oracle", "all"}));
  disjoint->add_option("--extent", a.disjoint.extent, "Oracle box half-width");
  disjoint->add_option("--resolution", a.disjoint.resolution, "Oracle cells per side");

  auto* verify = app.add_subcommand("verify", "Verify a foliation spec on a sample grid");
  add_scene(verify, a);
  add_sampling(verify, a);
  verify->add_option("--tol", a.verify.tol, "Infinitesimal tolerance (default per spec)");

  auto* foliate = app.add_subcommand("foliate", "Write one OBJ mesh per leaf plus a manifest");
  add_scene(foliate, a);
  add_sampling(foliate, a);
  foliate->add_option("--count", a.foliate.count, "Number of leaves");
  foliate->add_option("--extent", a.foliate.extent, "Mesh box half-width");
  foliate->add_option("--resolution", a.foliate.resolution, "Mesh cells per side");
  foliate->add_option("--out", a.foliate.out_dir, "Output directory");
  foliate->add_flag("--force", a.foliate.force, "Write leaves even if verification fails");

  auto* calibrate = app.add_subcommand("calibrate", "Fit a hyperbolic flow through two crooked planes");
  add_scene(calibrate, a);
  calibrate->add_option("plane1", a.plane1, "First plane name");
  calibrate->add_option("plane2", a.plane2, "Second plane name");
  calibrate->add_option("--emit", a.calibrate.emit_path, "Also write the emitted scene here");

  auto* mesh = app.add_subcommand("mesh", "Export one crooked plane as OBJ");
  add_scene(mesh, a);
  mesh->add_option("plane", a.mesh.plane, "Plane name");
  mesh->add_option("--extent", a.mesh.extent, "Box half-width");
  mesh->add_option("--resolution", a.mesh.resolution, "Cells per side");
  mesh->add_option("--out", a.mesh.out_path, "Output file (default stdout)");

  auto* repro = app.add_subcommand("repro", "Recompute a worked example");
  repro->add_option("name", a.repro, "Example name")->required()->check(CLI::IsMember(repro_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*repro) return cmd_repro(a.repro, std::cout);
    const Scene scene = load_scene(a.scene);
    if (*classify) return cmd_classify(scene, std::cout);
    if (*disjoint) {
      a.disjoint.plane1 = a.plane1;
      a.disjoint.plane2 = a.plane2;
      return cmd_disjoint(scene, a.disjoint, std::cout);
    }
    if (*verify) {
      a.verify.spec = a.spec;
      a.verify.sampling = sampling(a);
      return cmd_verify(scene, a.verify, std::cout);
    }
    if (*foliate) {
      a.foliate.spec = a.spec;
      a.foliate.sampling = sampling(a);
      return cmd_foliate(scene, a.foliate, std::cout);
    }
    if (*calibrate) {
      a.calibrate.plane1 = a.plane1;
      a.calibrate.plane2 = a.plane2;
      return cmd_calibrate(scene, a.calibrate, std::cout);
    }
    if (*mesh) return cmd_mesh(scene, a.mesh, std::cout);
  } catch (const SceneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << (a.scene.empty() ? std::string("crooked") : a.scene) << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
