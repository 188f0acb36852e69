"""Golden constants frozen from tools/make_golden.py (60-digit oracle). Do not edit by hand."""

# x -> {name: value string}; unscaled entries are None where they overflow a double
BESSEL = {
    "1e-6": {"k0": "13.9314420736264194134370746722", "k0e": "13.9314560050754587632152089118", "k1": "999999.999992784278963187707883", "k1e": "1000000.99999328427191412977154", "i0": "1.00000000000025000000000001562", "i0e": "0.999999000000749999583333515625", "i1": "0.000000500000000000062500000000002604", "i1e": "0.000000499999500000312499854166721354"},
    "0.001": {"k0": "7.02368880056238134361208006301", "k0e": "7.03071600237825151848061412739", "k1": "999.996238156085574277953404016", "k1e": "1000.99673455906845243231366241", "i0": "1.00000025000001562500043402778", "i0e": "0.999000749583515559395046764639", "i1": "0.00050000006250000260416672092014", "i1e": "0.000499500312354221336983820506498"},
    "0.1": {"k0": "2.42706902470201661251850602043", "k0e": "2.68232610226289438308110337811", "k1": "9.85384478087060613484854659668", "k1e": "10.8901826830496965742031049684", "i0": "1.00250156293409560140021055764", "i0e": "0.907100925782301096435726349406", "i1": "0.0500625260470926921138090643122", "i1e": "0.0452984468088093250071055098139"},
    "0.5": {"k0": "0.92441907122766586178192416753", "k0e": "1.52410938577390953002291509332", "k1": "1.65644112000330089369644540317", "k1e": "2.73100970821178570535915308965", "i0": "1.06348337074132351926318441545", "i0e": "0.645035270449150068107996629746", "i1": "0.257894305390896316362479659523", "i1e": "0.156420803184871697142645527404"},
    "1": {"k0": "0.421024438240708333335627379213", "k0e": "1.14446307980689501469904130357", "k1": "0.601907230197234574737540001536", "k1e": "1.63615348626325824651331113126", "i0": "1.26606587775200833559824462521", "i0e": "0.465759607593640436501901529563", "i1": "0.56515910399248502720769602761", "i1e": "0.207910415349708448869354685508"},
    "1.5": {"k0": "0.213805562647525736721620996251", "k0e": "0.958210053294896496416754894901", "k1": "0.277387800456843816085359661439", "k1e": "1.24316587355255299480026384489", "i0": "1.64672318977289084487630612549", "i0e": "0.367433609054158339238241506927", "i1": "0.981666428577907585652010907867", "i1e": "0.219039387420925672115110112329"},
    "2": {"k0": "0.113893872749533435652719574932", "k0e": "0.841568215070771417919124867346", "k1": "0.139865881816522427284598807035", "k1e": "1.03347684706868857317535710588", "i0": "2.27958530233606726743720444081", "i0e": "0.308508322553671039533384319267", "i1": "1.590636854637329063382254425", "i1e": "0.215269289248937659158505143255"},
    "2.5": {"k0": "0.062347553200366186029169529476", "k0e": "0.759548690328099578693718979251", "k1": "0.0738908163477470636489935405912", "k1e": "0.900174423907878089129560957071", "i0": "3.28983914405012303570590822991", "i0e": "0.27004644161220273956009865652", "i1": "2.51671624528869844152819174812", "i1e": "0.20658464953126655421464369045"},
    "3": {"k0": "0.0347395043862792480723495513511", "k0e": "0.697761598043851776055003262528", "k1": "0.0401564311281941843767057801527", "k1e": "0.806563480128786903325773978352", "i0": "4.88079258586502408561123554602", "i0e": "0.24300035416182539847261284708", "i1": "3.95337021740260939647863574058", "i1e": "0.196826713297300853630744830508"},
    "5": {"k0": "0.00369109833404259427473526100746", "k0e": "0.547807564313518986868201568743", "k1": "0.00404461344545216420836502183754", "k1e": "0.600273858788312582936045656627", "i0": "27.2398718236044468945442320759", "i0e": "0.183540812609328353073650751837", "i1": "24.3356421424505271991430504518", "i1e": "0.163972266944542356926122903858"},
    "10": {"k0": "0.0000177800623161676518113011927995", "k0e": "0.391631934436598665733921057536", "k1": "0.0000186487734538255845968168581224", "k1e": "0.410766570595788751130046941318", "i0": "2815.71662846625447146981115343", "i0e": "0.127833337163428607323050287645", "i1": "2670.98830370125465434103196677", "i1e": "0.12126268138445551871895497033"},
    "20": {"k0": "5.74123781533652429271670206162e-10", "k0e": "0.278544876657182223933163775622", "k1": "5.88305796955703817765028217154e-10", "k1e": "0.285425496940726445173529169645", "i0": "43558282.5595535332721066600892", "i0e": "0.0897803118848260215959446536697", "i1": "42454973.3851277701814099066586", "i1e": "0.0875062221832886653563300683152"},
    "50": {"k0": "3.41016774978949551392067551235e-23", "k0e": "0.176807155857429338111762123965", "k1": "3.44410222671755561259185303591e-23", "k1e": "0.178566558558815574600605670329", "i0": "293255378384933632665.467507946", "i0e": "0.0565616266474541925299391880158", "i1": "290307859010355679675.143325543", "i1e": "0.0559931238928953996438787075574"},
    "100": {"k0": "4.65662822917590201893900528948e-45", "k0e": "0.125175621659126578891558120087", "k1": "4.67985373563690928656254424202e-45", "k1e": "0.125799950479578529325103859005", "i0": "1.0737517071310738235197208576e+42", "i0e": "0.0399443792990966826475587051553", "i1": "1.06836939033816248120614576322e+42", "i1e": "0.0397441530251302526736389309882"},
    "300": {"k0": "3.72369485488914326325221016776e-132", "k0e": "0.0723300317396073016324760644302", "k1": "3.72989585833237269857740191053e-132", "k1e": "0.072450481667258409313576625139", "i0": "4.47584736793505211809932800318e+128", "i0e": "0.0230425584150854617939154879514", "i1": "4.46838138503695441387319433588e+128", "i1e": "0.023004122040268950901796933498"},
    "1000": {"k0": None, "k0e": "0.0396283216007542171147259217631", "k1": None, "k1e": "0.0396481308129602104801459279094", "i0": None, "i0e": "0.0126172404558912565857161312899", "i1": None, "i1e": "0.0126109302569286294702375643366"},
    "1e5": {"k0": None, "k0e": "0.00396332234347475586061423815841", "k1": None, "k1e": "0.00396334216003693220050765901275", "i0": None, "i0e": "0.0012615678379767767668976195751", "i1": None, "i1e": "0.00126156153012181712734063157938"},
}

# (alpha, R) -> decay rate k of the disk-exterior ground state; lambda = -k^2
DISK_K = {
    (-1.0, 1.0): "0.595046726449784292885018179745",
    (-2.0, 0.5): "1.19009345289956858577003635949",
    (-0.25, 4.0): "0.148761681612446073221254544936",
    (-4.0, 0.25): "2.38018690579913717154007271898",
    (-16.0, 4.0): "15.8754845460993743268746006669",
    (-0.25, 0.25): "0.000000505471528648975095719772801353",
    (-10.0, 1.0): "9.51194738680969687617420838631",
    (-0.02, 1.0): "2.16582978713505913243747883271e-22",
    (-0.05, 2.0): "0.0000254902247786885313576789105208",
}

# shooting oracle, ball R=1 exterior, alpha=-2 (3D radial problem)
BALL_K_SHOOT = 0.9999999999999984
# shooting oracle, reduced 3D quotient for spherocylinder r=1, L_axis=4, alpha=-2
SPHEROCYLINDER_K_SHOOT = 1.3554873740571263
