// Copyright 2026 The Reqlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Built-in English language data. Mirrors resources/english/*.tsv; a unit
// test keeps the two in sync.

#ifndef REQLINT_LANG_EN_HPP
#define REQLINT_LANG_EN_HPP

#include <string_view>

namespace reqlint::lang_en {

inline constexpr std::string_view kLemmaExceptions = R"TSV(am	be
are	be
is	be
was	be
were	be
been	be
being	be
has	have
had	have
having	have
does	do
did	do
done	do
doing	do
goes	go
went	go
gone	go
going	go
made	make
making	make
said	say
saying	say
saw	see
seen	see
seeing	see
took	take
taken	take
taking	take
gave	give
given	give
giving	give
got	get
gotten	get
getting	get
used	use
uses	use
using	use
came	come
coming	come
wrote	write
written	write
writing	write
found	find
kept	keep
held	hold
left	leave
meant	mean
met	meet
sent	send
set	set
sets	set
put	put
puts	put
read	read
reads	read
let	let
lets	let
began	begin
begun	begin
shown	show
showed	show
shall	shall
should	should
will	will
would	would
can	can
could	could
may	may
might	might
must	must
ought	ought
cannot	cannot
lost	lose
built	build
felt	feel
brought	bring
bought	buy
thought	think
caught	catch
taught	teach
told	tell
sold	sell
paid	pay
laid	lay
heard	hear
stood	stand
understood	understand
won	win
chose	choose
chosen	choose
drove	drive
driven	drive
rose	rise
risen	rise
fell	fall
fallen	fall
broke	break
broken	break
spoke	speak
spoken	speak
wore	wear
worn	wear
drew	draw
drawn	draw
knew	know
known	know
grew	grow
grown	grow
threw	throw
thrown	throw
flew	fly
flown	fly
ran	run
swam	swim
sang	sing
sung	sing
rang	ring
rung	ring
hung	hang
struck	strike
shut	shut
shuts	shut
cut	cut
cuts	cut
hit	hit
hits	hit
cost	cost
costs	cost
lit	light
slid	slide
bit	bite
bitten	bite
hid	hide
hidden	hide
ate	eat
eaten	eat
forgot	forget
forgotten	forget
sat	sit
lain	lie
rode	ride
ridden	ride
became	become
led	lead
fed	feed
bred	breed
sped	speed
shone	shine
shot	shoot
sought	seek
fought	fight
dealt	deal
dreamt	dream
learnt	learn
burnt	burn
spent	spend
bent	bend
lent	lend
slept	sleep
swept	sweep
wept	weep
crept	creep
overrode	override
overridden	override
rewritten	rewrite
withdrew	withdraw
withdrawn	withdraw
arose	arise
arisen	arise
upheld	uphold
foresaw	foresee
foreseen	foresee
agreed	agree
exceeded	exceed
proceeded	proceed
succeeded	succeed
speed	speed
indeed	indeed
children	child
feet	foot
teeth	tooth
mice	mouse
men	man
women	woman
people	person
criteria	criterion
indices	index
matrices	matrix
analyses	analysis
statuses	status
buses	bus
axes	axis
lenses	lens
species	species
series	series
news	news
means	mean
this	this
these	this
those	that
that	that
its	its
yes	yes
gas	gas
alias	alias
bias	bias
atlas	atlas
canvas	canvas
always	always
perhaps	perhaps
whereas	whereas
unless	unless
meanwhile	meanwhile
whose	whose
itself	itself
themselves	themselves
)TSV";

inline constexpr std::string_view kAbbreviations = R"TSV(e.g.	for example
i.e.	that is
etc.	and so on
cf.	compare
vs.	versus
approx.	approximately
resp.	respectively
fig.	figure
tab.	table
no.	number
nos.	numbers
sec.	section
para.	paragraph
ref.	reference
refs.	references
eq.	equation
app.	appendix
rev.	revision
ver.	version
ch.	chapter
pp.	pages
p.	page
dr.	doctor
mr.	mister
mrs.	missus
ms.	ms
prof.	professor
inc.	incorporated
ltd.	limited
co.	company
dept.	department
min.	minimum
max.	maximum
ca.	circa
al.	alii
st.	street
a.m.	ante meridiem
p.m.	post meridiem
u.s.	united states
)TSV";

inline constexpr std::string_view kLexicon = R"TSV(the	DET
a	DET
an	DET
this	DET
that	DET
these	DET
those	DET
each	DET
every	DET
all	DET
any	DET
some	DET
no	DET
both	DET
either	DET
neither	DET
another	DET
such	DET
my	DET
your	DET
his	DET
her	DET
their	DET
our	DET
its	DET
it	PRON
they	PRON
he	PRON
she	PRON
we	PRON
you	PRON
i	PRON
them	PRON
him	PRON
us	PRON
me	PRON
itself	PRON
themselves	PRON
who	PRON
whom	PRON
which	PRON
what	PRON
something	PRON
anything	PRON
nothing	PRON
everything	PRON
someone	PRON
anyone	PRON
everyone	PRON
shall	AUX
should	AUX
must	AUX
may	AUX
might	AUX
can	AUX
could	AUX
will	AUX
would	AUX
ought	AUX
is	AUX
are	AUX
was	AUX
were	AUX
am	AUX
be	AUX
been	AUX
being	AUX
has	AUX
have	AUX
had	AUX
does	AUX
do	AUX
did	AUX
in	ADP
on	ADP
at	ADP
by	ADP
for	ADP
with	ADP
within	ADP
without	ADP
from	ADP
to	ADP
of	ADP
over	ADP
under	ADP
after	ADP
before	ADP
during	ADP
between	ADP
through	ADP
via	ADP
into	ADP
onto	ADP
upon	ADP
about	ADP
above	ADP
below	ADP
per	ADP
against	ADP
across	ADP
along	ADP
around	ADP
behind	ADP
beyond	ADP
near	ADP
off	ADP
toward	ADP
towards	ADP
as	ADP
and	CONJ
or	CONJ
but	CONJ
nor	CONJ
if	CONJ
when	CONJ
while	CONJ
unless	CONJ
until	CONJ
because	CONJ
although	CONJ
though	CONJ
whereas	CONJ
since	CONJ
once	CONJ
whenever	CONJ
wherever	CONJ
whether	CONJ
not	PART
only	ADV
also	ADV
always	ADV
never	ADV
often	ADV
immediately	ADV
then	ADV
otherwise	ADV
however	ADV
therefore	ADV
thus	ADV
hence	ADV
moreover	ADV
furthermore	ADV
very	ADV
too	ADV
there	ADV
here	ADV
already	ADV
yet	ADV
still	ADV
again	ADV
instead	ADV
e.g.	ADV
i.e.	ADV
etc.	ADV
zero	NUM
one	NUM
two	NUM
three	NUM
four	NUM
five	NUM
six	NUM
seven	NUM
eight	NUM
nine	NUM
ten	NUM
eleven	NUM
twelve	NUM
hundred	NUM
thousand	NUM
million	NUM
ensure	VERB
verify	VERB
comply	VERB
respond	VERB
occur	VERB
contain	VERB
include	VERB
require	VERB
specify	VERB
define	VERB
describe	VERB
denote	VERB
refer	VERB
provide	VERB
perform	VERB
notify	VERB
transmit	VERB
activate	VERB
deactivate	VERB
precede	VERB
exceed	VERB
engage	VERB
apply	VERB
rely	VERB
)TSV";

inline constexpr std::string_view kGazetteer = R"TSV(Signal Interface Spec	document
Braking Handbook	document
Track Layout Manual	document
Door Control Unit	system
Central Control Center	system
Traction Converter	system
ACME Rail	organization
European Train Control System	system
)TSV";

}  // namespace reqlint::lang_en

#endif  // REQLINT_LANG_EN_HPP
