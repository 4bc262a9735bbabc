var person = new Object();

person.age = 5;
person['age'] = 5;

var theAge = person.age;
var theAge = person['age'];
theAge; // answers 5
