#include <iostream>
using namespace std;

void addNumbers(int x, int y, int &result)
{
	result = x + y;
}

int main()
{
	int times, p, q, answer;
	cout << "How many additions? ";
	cin >> times;
	int k = 1;
	while (k <= times)
	{
		cout << "Enter two numbers: ";
		cin >> p >> q;
		addNumbers(p, q, answer);
		cout << p << " + " << q << " = " << answer << endl;
		k++;
	}
	return 0;
}
